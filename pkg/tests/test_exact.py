"""Exact substrate: rationals, polynomials, truncated series."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebmellin.exact import (
    FormalSeries,
    RatPoly,
    TruncationOrderError,
    pochhammer,
    poly_reflect,
    poly_shift,
    rat_from_str,
    rat_to_str,
    series_compose_rational,
)
from chebmellin.hyper import lemma5_coefficient

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=40
)
small_polys = st.lists(rationals, min_size=1, max_size=7).map(RatPoly)


def test_pochhammer_examples():
    assert pochhammer(Fraction(5, 7), 0) == 1
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(Fraction(-2), 3) == 0


@given(rationals, st.integers(min_value=0, max_value=12))
def test_pochhammer_recurrence(a, k):
    assert pochhammer(a, k + 1) == pochhammer(a, k) * (a + k)


def test_poly_shift_examples():
    s2 = RatPoly([0, 0, 1])
    assert poly_shift(s2, 1) == RatPoly([1, 2, 1])
    p = RatPoly([Fraction(1, 3), Fraction(-2, 5), 4])
    assert poly_shift(p, 0) == p
    p2 = RatPoly([Fraction(-3, 8), Fraction(3, 4)])
    assert poly_shift(p2, 1) == RatPoly([Fraction(3, 8), Fraction(3, 4)])


@given(small_polys, rationals, rationals)
def test_poly_shift_additive(p, a, b):
    assert poly_shift(poly_shift(p, a), b) == poly_shift(p, a + b)


def test_poly_reflect_examples():
    assert poly_reflect(RatPoly([0, 1])) == RatPoly([1, -1])
    assert poly_reflect(RatPoly([Fraction(5, 9)])) == RatPoly([Fraction(5, 9)])
    p2 = RatPoly([Fraction(-3, 8), Fraction(3, 4)])
    assert poly_reflect(p2) == -p2


@given(small_polys)
def test_poly_reflect_involution(p):
    assert poly_reflect(poly_reflect(p)) == p


@given(
    st.integers(min_value=-(2**512), max_value=2**512),
    st.integers(min_value=1, max_value=2**512),
    st.integers(min_value=-(2**512), max_value=2**512),
    st.integers(min_value=1, max_value=2**512),
)
@settings(max_examples=60)
def test_rational_arithmetic_exact_512bit(pn, pd, qn, qd):
    p = Fraction(pn, pd)
    q = Fraction(qn, qd)
    assert (p + q) - q == p


def test_serialization_round_trip():
    for text in ("3/4", "-3/8", "0", "17", "-5/2"):
        assert rat_to_str(rat_from_str(text)) == text
    assert rat_to_str(Fraction(0, 1)) == "0"
    assert rat_to_str(Fraction(6, 8)) == "3/4"


def test_poly_divmod_exact():
    p = RatPoly.from_roots([Fraction(1, 2), 3, -2], lead=Fraction(5, 7))
    q, r = p.divmod(RatPoly([-3, 1]))
    assert r.is_zero()
    assert q * RatPoly([-3, 1]) == p
    with pytest.raises(ValueError):
        p.exact_div(RatPoly([1, 1]))


def test_poly_compose_and_derivative():
    inner = RatPoly([1, 2])
    outer = RatPoly([0, 0, 1])
    assert outer.compose(inner) == RatPoly([1, 4, 4])
    assert RatPoly([5, 3, 0, 2]).derivative() == RatPoly([3, 0, 6])


def test_formal_series_truncation_discipline():
    a = FormalSeries([1, 2, 3], 2)
    b = FormalSeries([1, 1], 1)
    total = a + b
    assert total.order == 1
    assert total.coefficient(1) == 3
    with pytest.raises(TruncationOrderError):
        total.coefficient(2)
    prod = a * b
    assert prod.order == 1
    assert prod.coefficient(1) == 3  # 1*1 + 2*1


def test_formal_series_agreement_up_to_common_order():
    a = FormalSeries([1, 2, 3, 999], 3)
    b = FormalSeries([1, 2, 3], 2)
    assert a.agrees_with(b)


def test_series_compose_rational_trivials():
    s = series_compose_rational(Fraction(1), Fraction(1, 2), Fraction(3, 2), 1, 12)
    assert s.coefficient(0) == 1
    assert all(s.coefficient(k) == 0 for k in range(1, 13, 2))
    with pytest.raises(ValueError):
        series_compose_rational(1, 1, Fraction(-2), 1, 4)
    with pytest.raises(ValueError):
        series_compose_rational(1, 1, 2, 3, 4)


def test_series_compose_matches_closed_coefficient():
    a, b, c = Fraction(1), Fraction(1, 2), Fraction(3, 2)
    s = series_compose_rational(a, b, c, 1, 8)
    assert s.coefficient(2) == lemma5_coefficient(a, b, c, 1, "single")
