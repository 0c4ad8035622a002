"""Numeric kernels: log-Gamma, quadrature oracle, root certification."""

from fractions import Fraction

import pytest
from mpmath import mp, mpc, mpf

from chebmellin.closedform import GammaPoleError, to_mp
from chebmellin.cheb_mellin import mellin_T_closed, mellin_U_closed, p_poly_U
from chebmellin.exact import RatPoly
from chebmellin.gegen_mellin import mellin_G_closed, p_poly_gegen
from chebmellin.numerics import (
    QuadratureError,
    ZeroReport,
    auxiliary_quadrature,
    critical_line_report,
    find_roots,
    log_gamma,
    mellin_quadrature,
    tanh_sinh,
)

HALF = Fraction(1, 2)


def test_log_gamma_known_values():
    with mp.workprec(300):
        assert abs(log_gamma(mpf(1), 256)) < mpf(2) ** -240
        assert abs(log_gamma(mpf(1) / 2, 256) - mp.log(mp.sqrt(mp.pi))) < mpf(2) ** -240
        refl = mp.exp(log_gamma(mpf(3) / 4, 256) + log_gamma(mpf(1) / 4, 256))
        assert abs(refl - mp.pi * mp.sqrt(2)) < mpf(2) ** -240
    with pytest.raises(GammaPoleError):
        log_gamma(mpf(-3), 128)


def test_tanh_sinh_endpoint_singularities():
    with mp.workprec(280):
        got = tanh_sinh(lambda x: 1 / mp.sqrt(x), 0, 1, 256)
        assert abs(got - 2) < mpf(10) ** -12
        got = tanh_sinh(lambda x: mp.log(x), 0, 1, 256)
        assert abs(got + 1) < mpf(10) ** -12


def test_mellin_quadrature_examples():
    with mp.workprec(280):
        got = mellin_quadrature("U", 0, None, mpf(2), 256)
        assert abs(got - mpf(2) / 3) < mpf(10) ** -12
        got = mellin_quadrature("T", 2, None, mpf(2), 256)
        assert abs(got + mpf(1) / 15) < mpf(10) ** -12
        got = mellin_quadrature("gegenbauer", 0, HALF, mpf(1), 256)
        assert abs(got - mp.pi / 2) < mpf(10) ** -12


def test_mellin_quadrature_domain_guard():
    with pytest.raises(ValueError):
        mellin_quadrature("U", 2, None, mpf(0), 128)
    with pytest.raises(ValueError):
        mellin_quadrature("gegenbauer", 2, Fraction(-3, 4), mpf(2), 128)


def test_oracle_equivalence_spot():
    cases = [
        ("U", 7, None, mellin_U_closed(7)),
        ("T", 5, None, mellin_T_closed(5)),
        ("gegenbauer", 4, Fraction(7, 3), mellin_G_closed(4, Fraction(7, 3))),
    ]
    with mp.workprec(280):
        for family, n, lam, form in cases:
            for s in (mpf(3) / 4, mpf(2), mpc(1, 1)):
                want = form.evaluate(s, 256)
                got = mellin_quadrature(family, n, lam, s, 256)
                assert abs(got - want) / max(abs(want), mpf(1)) < mpf(10) ** -8


def test_auxiliary_quadrature_trivials():
    with mp.workprec(280):
        got = auxiliary_quadrature("eq312", {"r": HALF, "q": Fraction(3, 2), "n": 0}, 256)
        want = mp.gamma(mpf(3) / 2) * mp.gamma(mpf(5) / 2) / mp.gamma(4)
        assert abs(got - want) < mpf(10) ** -12
        # weight identity at n = 1: the polynomial part is constant 1
        got = auxiliary_quadrature("eq23", {"beta": HALF, "n": 1, "s": Fraction(2)}, 256)
        want = (
            mpf(2) ** (2 * 0.5 - 1) * mp.sqrt(mp.pi) * mp.gamma(mpf(1) / 2) / mp.gamma(mpf(1))
        )
        assert abs(got - want) < mpf(10) ** -10
        got = auxiliary_quadrature(
            "eq51", {"n": 1, "lam": Fraction(1), "x": HALF}, 256
        )
        assert abs(got - 1) < mpf(10) ** -10


def test_find_roots_linear_exact():
    report = find_roots(RatPoly([Fraction(-3, 8), Fraction(3, 4)]), 256)
    assert report.real_roots == (HALF,)
    assert report.max_re_deviation == 0
    assert critical_line_report(report, mpf(10) ** -20).verdict == "critical"


def test_find_roots_p4():
    report = find_roots(p_poly_U(4), 256)
    assert report.degree == 2
    with mp.workprec(300):
        target = 2 / mp.sqrt(5)
        for root in report.roots:
            assert abs(mp.re(root) - mpf(1) / 2) < mpf(10) ** -25
            assert abs(abs(mp.im(root)) - target) < mpf(10) ** -25
    assert report.conjugate_pairing_ok
    assert critical_line_report(report, mpf(10) ** -20).verdict == "critical"


def test_find_roots_t_family_exact():
    report = find_roots(mellin_T_closed(4).poly, 256)
    assert report.real_roots == (Fraction(1), Fraction(15))
    assert critical_line_report(report, mpf(10) ** -20).verdict == "real-line"
    report5 = find_roots(mellin_T_closed(5).poly, 256)
    assert report5.real_roots == (Fraction(2), Fraction(24))


def test_find_roots_degree_zero_vacuous():
    report = find_roots(RatPoly([Fraction(5)]), 128)
    assert report.roots == ()
    assert critical_line_report(report, mpf(10) ** -20).verdict == "critical"


def test_residual_bound_and_count():
    for n in (6, 9, 14):
        p = p_poly_U(n)
        report = find_roots(p, 256)
        assert len(report.roots) == p.degree
        assert all(r <= report.residual_bound for r in report.residuals)


def test_conjugate_pairing_property():
    for n in (8, 13):
        report = find_roots(p_poly_gegen(n, Fraction(3, 2)), 256)
        assert report.conjugate_pairing_ok


def test_precision_monotonicity():
    p = p_poly_U(12)
    dev_lo = find_roots(p, 128).max_re_deviation
    dev_hi = find_roots(p, 256).max_re_deviation
    with mp.workprec(300):
        assert dev_hi <= dev_lo + mpf(2) ** -(128 - 16)


def test_mixed_verdict():
    # roots at 0.3 and 0.7 +- i: neither on the line nor real
    p = RatPoly.from_roots([Fraction(3, 10)]) * RatPoly(
        [Fraction(149, 100), Fraction(-7, 5), 1]
    )
    report = find_roots(p, 192)
    verdict = critical_line_report(report, mpf(10) ** -20)
    assert verdict.verdict == "mixed"
    assert verdict.offending
