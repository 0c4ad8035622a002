"""Gegenbauer family: polynomials, transforms, difference equation, Hahn link."""

import random
from fractions import Fraction

import pytest
from mpmath import mp, mpc, mpf

from chebmellin.cheb_mellin import chebyshev_poly, p_poly_U
from chebmellin.closedform import combine_gamma_values
from chebmellin.exact import RatPoly, pochhammer
from chebmellin.gegen_mellin import (
    GegenParams,
    corollary1_check,
    corollary1_gamma_form,
    difference_equation_residual,
    eq52_check,
    gegenbauer_poly,
    hahn_proportionality,
    legendre_poly,
    lemma12a_check,
    lemma12b_check,
    lemma12c_check,
    lemma13_check,
    lemma15_check,
    mellin_G_closed,
    mellin_beta_closed,
    p_poly_beta,
    p_poly_gegen,
    prop5a_recurrence_check,
    verify_generating_function_G,
)

HALF = Fraction(1, 2)
LAMBDAS = (HALF, Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7, 3))
BETAS = (Fraction(0), Fraction(-1), Fraction(-2), HALF)


def test_gegen_params_linkage():
    p = GegenParams.from_lambda(Fraction(3, 2))
    assert p.beta == Fraction(0)
    q = GegenParams.from_beta(Fraction(-1))
    assert q.lam == Fraction(7, 2)
    assert GegenParams.from_beta(p.beta).lam == p.lam
    with pytest.raises(ValueError):
        GegenParams.from_lambda(Fraction(-1, 2))
    with pytest.raises(ValueError):
        GegenParams.from_beta(Fraction(1))


def test_gegenbauer_examples():
    lam = Fraction(5, 3)
    assert gegenbauer_poly(1, lam) == RatPoly([0, 2 * lam], "x")
    assert gegenbauer_poly(2, lam) == RatPoly([-lam, 0, 2 * lam * (lam + 1)], "x")
    for n in range(11):
        assert gegenbauer_poly(n, Fraction(1)) == chebyshev_poly("U", n)
        assert gegenbauer_poly(n, lam)(Fraction(1)) == pochhammer(2 * lam, n) / pochhammer(1, n)


def test_p_poly_gegen_examples():
    assert p_poly_gegen(1, Fraction(9, 4)) == RatPoly([1])
    assert p_poly_gegen(2, Fraction(1)) == RatPoly([Fraction(-1, 4), HALF])
    assert p_poly_gegen(4, Fraction(1)) == RatPoly(
        [Fraction(21, 80), Fraction(-1, 4), Fraction(1, 4)]
    )


def test_p_poly_beta_examples():
    for beta in BETAS:
        assert p_poly_beta(2, beta) == RatPoly([Fraction(-1, 4), HALF])
        assert p_poly_beta(3, beta) == RatPoly([Fraction(-1, 4), HALF])
    assert p_poly_beta(4, Fraction(0)) == RatPoly([Fraction(1, 4), Fraction(-1, 4), Fraction(1, 4)])


def test_beta_gegen_consistency():
    for lam in LAMBDAS:
        beta = Fraction(3, 4) - lam / 2
        for n in range(13):
            assert p_poly_beta(n, beta) == p_poly_gegen(n, lam)


def test_lambda_one_reduction():
    for n in range(11):
        pg = p_poly_gegen(n, Fraction(1))
        pu = p_poly_U(n)
        assert pu == pg.scale(Fraction(n + 1, 2))


def test_functional_equation_grid():
    for lam in LAMBDAS:
        for n in range(21):
            p = p_poly_gegen(n, lam)
            assert p.degree == n // 2
            assert p.reflect() == p.scale(Fraction(-1) ** (n // 2))
    for beta in BETAS:
        for n in range(21):
            p = p_poly_beta(n, beta)
            assert p.reflect() == p.scale(Fraction(-1) ** (n // 2))


def test_mellin_G_base_cases():
    lam = Fraction(3, 2)
    f0 = mellin_G_closed(0, lam)
    assert f0.poly == RatPoly([1])
    assert f0.const.rational == HALF
    assert f0.gamma_den_offset == lam / 2 + Fraction(1, 4)
    # M_1 = 2 lam M_0(s+1) exactly
    s = Fraction(7, 3)
    diff = combine_gamma_values(
        [
            mellin_G_closed(1, lam).rational_rep(s),
            mellin_G_closed(0, lam).rational_rep(s, 1) * Fraction(-2 * lam),
        ]
    )
    assert diff == 0


def test_recurrence_exact():
    rng = random.Random(23)
    for lam in LAMBDAS:
        for n in range(2, 16):
            for _ in range(10):
                s = Fraction(rng.randint(1, 40), rng.choice((1, 2, 3, 4, 5)))
                assert prop5a_recurrence_check(n, lam, s)


def test_difference_equation_residual_zero():
    for lam in LAMBDAS:
        for n in range(16):
            assert difference_equation_residual(n, lam).is_zero()
    # spot shapes from small cases
    assert difference_equation_residual(0, Fraction(1)).is_zero()
    assert difference_equation_residual(2, Fraction(1)).is_zero()
    assert difference_equation_residual(3, HALF).is_zero()


def test_corollary1_beta0():
    # telescoped hand value at n=2, s=3: (1/2)(s - 1/2) = 5/4
    assert p_poly_beta(2, Fraction(0))(Fraction(3)) == Fraction(5, 4)
    assert corollary1_check(2, 0, Fraction(10, 3))
    assert corollary1_check(5, 0, Fraction(7, 4))
    assert corollary1_check(1, 0, Fraction(11, 5))  # both sides 1 for n <= 1


def test_corollary1_negative_integer_beta():
    assert corollary1_check(4, 1, Fraction(2))
    for n in range(2, 9):
        for m in (0, 1, 2, 3):
            s = Fraction(2 * n + 1, 3)
            assert corollary1_gamma_form(n, m, s) == p_poly_beta(n, Fraction(-m))(s)


def test_hahn_proportionality_trivial_and_derived():
    r0 = hahn_proportionality(0, Fraction(1), precision_bits=192)
    assert r0.spread == 0
    r2 = hahn_proportionality(
        2, Fraction(1), s_samples=[mpf(3) / 10, mpf(17) / 10, mpc(2, 1)], precision_bits=256
    )
    assert r2.spread < mpf(10) ** -10
    r4 = hahn_proportionality(4, Fraction(3, 2), precision_bits=256)
    assert r4.spread < mpf(10) ** -10
    r5 = hahn_proportionality(5, Fraction(3, 2), precision_bits=256)
    assert r5.spread < mpf(10) ** -10


def test_generating_function_lambda():
    dev = verify_generating_function_G(Fraction(3, 2), Fraction(2), 10, 256)
    assert dev < mpf(10) ** -10


def test_identity_examples():
    # convolution of Legendre values at m = 2: 2 P0 P2 + P1^2 = U_2
    lhs = legendre_poly(0) * legendre_poly(2) * Fraction(2) + legendre_poly(1) * legendre_poly(1)
    assert lhs == chebyshev_poly("U", 2)
    for m in range(9):
        assert lemma12a_check(m)
        assert lemma12b_check(m)
        assert lemma12c_check(m, HALF, HALF)
        assert lemma12c_check(m, Fraction(1), Fraction(3, 2))
        assert eq52_check(m)
        assert lemma15_check(m)
    # two-term hand sum at n = 2
    assert lemma15_check(2) and chebyshev_poly("T", 2) == RatPoly([-1, 0, 2], "x")


def test_lemma13_limit():
    for n in (1, 2, 5, 8):
        bounds_ok, decay_ok = lemma13_check(n, HALF)
        assert bounds_ok and decay_ok


def test_beta_closed_form_family_tag():
    form = mellin_beta_closed(3, Fraction(-1))
    assert form.family == "beta"
    assert form.lam == Fraction(7, 2)
    assert form.poly == p_poly_gegen(3, Fraction(7, 2))
