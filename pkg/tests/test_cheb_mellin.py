"""Chebyshev families: polynomial factors, closed forms, identity suites."""

import random
from fractions import Fraction

import pytest
from mpmath import mp, mpc, mpf

from chebmellin.cheb_mellin import (
    chebyshev_poly,
    chebyshev_u_signed,
    corollary2_check,
    lemma6_eval,
    lemma8b_value_rep,
    lemma10_check,
    lemma11_check,
    mellin_T_closed,
    mellin_U_closed,
    mellin_ratio_closed,
    mellin_ratio_prop4,
    mellin_u_rep,
    p_poly_U,
    p_poly_U_hyper,
    pell_morgan_voyce,
    prop7_expected_roots,
    verify_composition_identities,
    verify_generating_functions,
    verify_lemma3,
    verify_lemma7,
    verify_lemma9,
)
from chebmellin.closedform import combine_gamma_values
from chebmellin.exact import RatPoly

HALF = Fraction(1, 2)


def test_chebyshev_examples():
    assert chebyshev_poly("U", 0) == RatPoly([1], "x")
    assert chebyshev_poly("U", 2) == RatPoly([-1, 0, 4], "x")
    assert chebyshev_poly("T", 2) == RatPoly([-1, 0, 2], "x")
    for n in range(9):
        assert chebyshev_poly("U", n)(Fraction(1)) == n + 1
        assert chebyshev_poly("T", n)(Fraction(1)) == 1
        assert chebyshev_poly("U", n).degree == n


def test_negative_index_convention():
    assert chebyshev_u_signed(-1).is_zero()
    assert chebyshev_u_signed(-3) == -chebyshev_poly("U", 1)


def test_p_poly_examples():
    assert p_poly_U(0) == RatPoly([HALF])
    assert p_poly_U(1) == RatPoly([1])
    assert p_poly_U(2) == RatPoly([Fraction(-3, 8), Fraction(3, 4)])
    assert p_poly_U(3) == RatPoly([Fraction(-1, 2), 1])
    assert p_poly_U(4) == RatPoly([Fraction(21, 32), Fraction(-5, 8), Fraction(5, 8)])


def test_p_poly_degree_and_functional_equation():
    for n in range(41):
        p = p_poly_U(n)
        assert p.degree == n // 2
        assert p.reflect() == p.scale(Fraction(-1) ** (n // 2))


def test_hyper_route_matches_recursion():
    for n in range(25):
        assert p_poly_U_hyper(n) == p_poly_U(n)


def test_mellin_U_closed_shape():
    f0 = mellin_U_closed(0)
    assert f0.poly == RatPoly([HALF])
    assert f0.gamma_den_offset == Fraction(3, 4)
    f1 = mellin_U_closed(1)
    assert f1.poly == RatPoly([1])
    assert f1.epsilon == 1 and f1.gamma_den_offset == Fraction(5, 4)
    f2 = mellin_U_closed(2)
    assert f2.poly == RatPoly([Fraction(-3, 8), Fraction(3, 4)])
    assert f2.gamma_den_offset == Fraction(7, 4)


def test_exact_special_values():
    assert mellin_U_closed(0).evaluate_exact(Fraction(2)) == Fraction(2, 3)
    assert mellin_U_closed(1).evaluate_exact(Fraction(1)) == Fraction(4, 3)
    assert mellin_U_closed(2).evaluate_exact(Fraction(2)) == Fraction(6, 7)
    assert mellin_T_closed(2).evaluate_exact(Fraction(2)) == Fraction(-1, 15)


def test_ratio_form_examples():
    assert mellin_ratio_prop4(0, Fraction(7, 3)) == 1
    assert mellin_ratio_prop4(1, Fraction(7, 3)) == 2
    assert mellin_ratio_prop4(2, Fraction(2)) == Fraction(9, 7)
    s = Fraction(5, 4)
    assert mellin_ratio_prop4(2, s) == 3 * (2 * s - 1) / (2 * s + 3)


def test_ratio_form_matches_telescoped_closed_form():
    rng = random.Random(11)
    for n in range(16):
        for _ in range(10):
            s = Fraction(rng.randint(1, 40), rng.choice((1, 2, 3, 4, 5)))
            assert mellin_ratio_prop4(n, s) == mellin_ratio_closed(n, s)


def test_second_3f2_form_matches():
    rng = random.Random(3)
    for n in range(13):
        s = Fraction(rng.randint(1, 30), rng.choice((2, 3, 4)))
        diff = combine_gamma_values(
            [mellin_u_rep(n, s), lemma8b_value_rep(n, s) * Fraction(-1)]
        )
        assert diff == 0


def test_lemma6_eval_examples():
    with mp.workprec(300):
        # k = 0 recovers the base transform
        got = lemma6_eval(0, mpf(2), 256)
        assert abs(got - mpf(2) / 3) < mpf(2) ** -240
        got = lemma6_eval(2, mpf(2), 256)
        assert abs(got - mpf(6) / 7) < mpf(2) ** -240
        got = lemma6_eval(1, mpf(1), 256)
        assert abs(got - mpf(4) / 3) < mpf(2) ** -240
        sm = mpc(2, 1)
        want = mellin_U_closed(5).evaluate(sm, 256)
        assert abs(lemma6_eval(5, sm, 256) - want) / abs(want) < mpf(2) ** -200


def test_t_family_closed_form():
    f2 = mellin_T_closed(2)
    assert f2.poly == RatPoly([-3, 1])
    assert f2.const.rational == Fraction(1, 8)
    # ratio to the base transform telescopes to (s-3)/(s+3)
    s = Fraction(7, 2)
    v2 = mellin_T_closed(2).rational_rep(s)
    v0 = mellin_T_closed(0).rational_rep(s)
    den_base = max(v2.den_arg, v0.den_arg)
    ratio = v2.scaled_coef(v0.num_arg, den_base) / v0.scaled_coef(v0.num_arg, den_base)
    assert ratio == (s - 3) / (s + 3)
    f4 = mellin_T_closed(4)
    assert f4.poly == RatPoly([15, -16, 1])
    assert f4.gamma_den_offset == Fraction(7, 2)


def test_t_family_root_sets():
    for n in range(2, 13):
        poly = mellin_T_closed(n).poly
        expected = prop7_expected_roots(n)
        built = RatPoly.from_roots(expected)
        assert poly == built
    assert prop7_expected_roots(5) == [Fraction(2), Fraction(24)]
    assert prop7_expected_roots(4) == [Fraction(1), Fraction(15)]


def test_t_constant_recursion_consistent():
    for n in range(13):
        assert mellin_T_closed(n).const.rational == Fraction(1, 4 * 2 ** (n // 2))


def test_lemma3_examples():
    # m = 0 in (a) and k = 0 in (b) degenerate to M_n(s) = M_n(s)
    assert verify_lemma3(3, 0, 0, Fraction(7, 3))
    assert verify_lemma3(1, 1, 1, Fraction(2))
    rng = random.Random(5)
    for n in range(0, 9, 2):
        for m in (1, 2, 3):
            for k in (1, 2):
                s = Fraction(rng.randint(1, 30), rng.choice((1, 2, 3)))
                assert verify_lemma3(n, m, k, s), (n, m, k, s)


def test_generating_functions_tolerance():
    for s in (Fraction(2), Fraction(7, 2)):
        assert verify_generating_functions("U", s, 12, 256) < mpf(10) ** -10
        assert verify_generating_functions("T", s, 12, 256) < mpf(10) ** -10


def test_generating_rejects_large_order():
    with pytest.raises(ValueError):
        verify_generating_functions("U", Fraction(2), 30, 128)


def test_corollary2_small_t():
    dev, converged = corollary2_check(Fraction(2), Fraction(1, 10), 256)
    assert converged and dev < mpf(10) ** -10
    dev, converged = corollary2_check(Fraction(7, 2), Fraction(1, 8), 256)
    assert converged and dev < mpf(10) ** -10


def test_composition_identities():
    assert verify_composition_identities(1, 5)   # U_{n-1} = U_0(T_n) U_{n-1}
    assert verify_composition_identities(2, 2)
    assert verify_composition_identities(1, 1)   # T_1 = (1/2) U_1 via U_{-1} = 0
    assert verify_composition_identities(3, 4)
    # the m = n = 2 product expansion by hand: U_3 = U_1(T_2) U_1
    u3 = chebyshev_poly("U", 1).compose(chebyshev_poly("T", 2)) * chebyshev_poly("U", 1)
    assert u3 == RatPoly([0, -4, 0, 8], "x") == chebyshev_poly("U", 3)


def test_lemma7_finite_sums():
    for n in range(13):
        assert verify_lemma7(n)
    # hand case n = 2: 3x^2 + (x^2 - 1) = U_2
    assert RatPoly([-1, 0, 4], "x") == chebyshev_poly("U", 2)


def test_lemma9_numeric():
    assert verify_lemma9(Fraction(1, 2), Fraction(1, 4), 1, 256)
    assert verify_lemma9(Fraction(1, 2), Fraction(1, 4), 2, 256)
    assert verify_lemma9(Fraction(-3, 5), Fraction(1, 3), 3, 256)
    assert verify_lemma9(Fraction(1), Fraction(1, 4), 1, 256)  # x -> 1 limit
    with pytest.raises(ValueError):
        verify_lemma9(Fraction(3, 2), Fraction(1, 4), 1, 128)


def test_lemma10_exact():
    assert lemma10_check(Fraction(0), Fraction(0), 0)
    assert lemma10_check(Fraction(0), Fraction(0), 1)
    for r, q, n in ((HALF, Fraction(3, 2), 5), (Fraction(-1, 3), Fraction(2), 8)):
        assert lemma10_check(r, q, n)


def test_lemma11_double_sum():
    for n, s in ((0, Fraction(2)), (1, Fraction(2)), (2, Fraction(5, 2))):
        assert lemma11_check(n, s, 192) < mpf(10) ** -8


def test_pell_examples():
    x = RatPoly([0, 1], "x")
    assert pell_morgan_voyce("pell", 1) == x
    assert pell_morgan_voyce("pell", 2) == RatPoly([0, 0, 2], "x")
    assert pell_morgan_voyce("pell", 3) == RatPoly([0, 1, 0, 4], "x")
    assert pell_morgan_voyce("mv_B", 1) == RatPoly([2, 1], "x")
    assert pell_morgan_voyce("mv_b", 0) == RatPoly([1], "x")
    with pytest.raises(ValueError):
        pell_morgan_voyce("pell", 0)


def test_pell_recursion_and_morgan_voyce_links():
    two_x = RatPoly([0, 2], "x")
    for n in range(3, 12):
        assert pell_morgan_voyce("pell", n) == two_x * pell_morgan_voyce(
            "pell", n - 1
        ) + pell_morgan_voyce("pell", n - 2)
    xp2 = RatPoly([2, 1], "x")
    for kind in ("mv_b", "mv_B"):
        for n in range(2, 12):
            assert pell_morgan_voyce(kind, n) == xp2 * pell_morgan_voyce(
                kind, n - 1
            ) - pell_morgan_voyce(kind, n - 2)
