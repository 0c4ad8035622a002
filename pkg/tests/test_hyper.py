"""Hypergeometric engine: exact sums, numerics, and the 3F2(1) rewritings."""

import random
from fractions import Fraction

import pytest
from mpmath import mp, mpf

from chebmellin.exact import pochhammer, series_compose_rational
from chebmellin.hyper import (
    DivergentSeriesError,
    HyperSeries,
    PoleBeforeTerminationError,
    appendix_transforms,
    chu_vandermonde,
    lemma5_coefficient,
    pfq_numeric,
    pfq_terminating_exact,
    pole_before_index,
    thomae_shift,
    thomae_transform,
)

HALF = Fraction(1, 2)


def test_terminating_exact_examples():
    assert pfq_terminating_exact(HyperSeries([0, 5, HALF], [3, 4])) == 1
    got = pfq_terminating_exact(HyperSeries([-1, 2, 3], [5, 7]))
    assert got == Fraction(29, 35)
    got = pfq_terminating_exact(HyperSeries([-2, 1], [3]))
    assert got == Fraction(1, 2)


def test_terminating_pole_before_termination():
    with pytest.raises(PoleBeforeTerminationError):
        pfq_terminating_exact(HyperSeries([-4, 1], [-2]))
    # numerator zero coming first is fine only if no earlier denominator pole
    assert pfq_terminating_exact(HyperSeries([0, 1], [-5])) == 1


def test_pfq_numeric_examples():
    assert pfq_numeric(HyperSeries([], [1], 0), 128) == 1
    v = pfq_numeric(HyperSeries([1, 1], [2], HALF), 256)
    with mp.workprec(280):
        assert abs(v - 2 * mp.log(2)) < mpf(2) ** -240
    exact = pfq_terminating_exact(HyperSeries([-3, HALF, 2], [3, 4]))
    numeric = pfq_numeric(HyperSeries([-3, HALF, 2], [3, 4]), 256)
    with mp.workprec(280):
        assert abs(numeric - mpf(exact.numerator) / exact.denominator) < mpf(2) ** -248


def test_pfq_numeric_two_precisions_agree():
    h = HyperSeries([Fraction(1, 3), Fraction(5, 4)], [Fraction(7, 2)], Fraction(2, 5))
    lo = pfq_numeric(h, 128)
    hi = pfq_numeric(h, 256)
    with mp.workprec(300):
        assert abs(lo - hi) / abs(hi) < mpf(2) ** -(128 - 8)


def test_pfq_numeric_divergence_flagged():
    with pytest.raises(DivergentSeriesError):
        pfq_numeric(HyperSeries([1, 1], [2], 1), 128)
    with pytest.raises(DivergentSeriesError):
        pfq_numeric(HyperSeries([1, 1, 1], [2], Fraction(1, 3)), 128)


def test_chu_vandermonde_examples():
    assert chu_vandermonde(0, Fraction(9, 4), Fraction(1, 3)) == 1
    assert chu_vandermonde(2, Fraction(1), Fraction(3)) == HALF
    assert chu_vandermonde(4, Fraction(5, 3), Fraction(5, 3)) == 0
    with pytest.raises(PoleBeforeTerminationError):
        chu_vandermonde(3, Fraction(1, 2), Fraction(-1))


def test_chu_vandermonde_matches_series_on_grid():
    for n in range(11):
        for b in (HALF, Fraction(5, 3), Fraction(-7, 4)):
            for c in (Fraction(13, 4), Fraction(9, 2)):
                direct = pfq_terminating_exact(HyperSeries([Fraction(-n), b], [c]))
                assert chu_vandermonde(n, b, c) == direct


def test_thomae_shift_arithmetic():
    assert thomae_shift(1, 1, 1, 2, 2) == 1


def test_thomae_transform_reproduces_value():
    original = pfq_terminating_exact(HyperSeries([-3, HALF, 2], [3, 4]))
    result = thomae_transform(-3, HALF, 2, 3, 4)
    assert result.value() == original == Fraction(4, 5)


def test_thomae_transform_n_zero():
    result = thomae_transform(0, Fraction(2, 3), Fraction(5), Fraction(7, 2), Fraction(9))
    assert result.prefactor == 1
    assert result.value() == 1


def test_appendix_example_hand_value():
    base = pfq_terminating_exact(HyperSeries([-1, 2, 3], [5, 7]))
    transforms = appendix_transforms(1, 2, 3, 5, 7)
    t4 = transforms[3]
    assert t4.index == 4 and t4.status == "ok"
    assert t4.result.prefactor == Fraction(-6, 35)
    assert pfq_terminating_exact(t4.result.series) == 1 - Fraction(35, 6)
    assert t4.result.value() == base == Fraction(29, 35)


def test_appendix_n_zero_all_unity():
    for tr in appendix_transforms(0, Fraction(2, 3), Fraction(7, 5), Fraction(9, 4), Fraction(3)):
        assert tr.status == "ok"
        assert tr.result.prefactor == 1
        assert tr.result.value() == 1


def test_appendix_transform3_prefactor_poch():
    tr = appendix_transforms(0, Fraction(1, 3), Fraction(2), Fraction(5, 2), Fraction(4))[2]
    assert tr.result.prefactor == 1  # empty Pochhammer at n = 0


def test_appendix_rejects_pole_before_nominal_index():
    with pytest.raises(PoleBeforeTerminationError):
        appendix_transforms(8, Fraction(0), Fraction(2), Fraction(-9, 5), Fraction(-1))
    assert pole_before_index((Fraction(-1),), 8)
    assert not pole_before_index((Fraction(-9, 5), Fraction(3)), 8)


def test_transform_fuzz_seeded():
    rng = random.Random(20240817)
    checked = 0
    while checked < 60:
        n = rng.randint(0, 8)
        a, b, c, d = (
            Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(4)
        )
        if pole_before_index((c, d), n):
            continue
        base = pfq_terminating_exact(HyperSeries([Fraction(-n), a, b], [c, d]))
        for tr in appendix_transforms(n, a, b, c, d):
            if tr.status == "ok":
                assert tr.result.value() == base, (n, a, b, c, d, tr.index)
        try:
            assert thomae_transform(Fraction(-n), a, b, c, d).value() == base
        except PoleBeforeTerminationError:
            pass
        checked += 1


def test_lemma5_coefficient_examples():
    assert lemma5_coefficient(Fraction(5, 3), Fraction(1, 2), Fraction(7, 4), 0, "single") == 1
    # a = 1 collapses one numerator factor against 1 - a - m
    a, b, c = Fraction(1), Fraction(1), Fraction(7, 4)
    via_formula = lemma5_coefficient(a, b, c, 2, "single")
    reduced = (
        Fraction(4) ** 2
        * pochhammer(b, 2)
        / pochhammer(c, 2)
        / pochhammer(Fraction(1), 2)
        * pochhammer(Fraction(1), 2)
        * pfq_terminating_exact(
            HyperSeries(
                [HALF - 2, 1 - c - 2, Fraction(-2)],
                [1 - b - 2, Fraction(-4)],
            )
        )
    )
    assert via_formula == reduced


def test_lemma5_matches_series_oracle():
    rng = random.Random(7)
    for _ in range(20):
        a = Fraction(rng.randint(1, 20), rng.randint(1, 20))
        b = Fraction(rng.randint(1, 20), rng.randint(1, 20))
        c = Fraction(rng.randint(1, 20), rng.randint(1, 20))
        single = series_compose_rational(a, b, c, 1, 16)
        double = series_compose_rational(a, b, c, 2, 16)
        for m in range(9):
            assert lemma5_coefficient(a, b, c, m, "single") == single.coefficient(2 * m)
            assert lemma5_coefficient(a, b, c, m, "double") == double.coefficient(2 * m)


def test_lemma5_specific_derived_case():
    # a=1, b = s/2 at s=2, c = 7/4, m = 2, single prefactor
    a, b, c = Fraction(1), Fraction(1), Fraction(7, 4)
    oracle = series_compose_rational(a, b, c, 1, 8)
    assert lemma5_coefficient(a, b, c, 2, "single") == oracle.coefficient(4)
