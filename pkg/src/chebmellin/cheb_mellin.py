"""Chebyshev polynomials U_n/T_n, their transforms on [0,1] against the
weights (1-x^2)^(-1/4) and (1-x^2)^(1/2), the exact polynomial factors, and
the identity suites tying the different closed forms together.

Polynomial factors are normalized rationally: the U family stores
p_0 = 1/2, p_1 = 1 with the Gamma(3/4) carried in the closed form's
constant; the T family stores a monic factor with the rational multiple of
sqrt(pi) in the constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

import mpmath
from mpmath import mp, mpc, mpf

from .closedform import (
    GAMMA_34,
    SQRT_PI,
    ConstClass,
    GammaRatioValue,
    MellinClosedForm,
    combine_gamma_values,
    to_mp,
)
from .exact import RatPoly, Rat, pochhammer
from .hyper import (
    HyperSeries,
    expansion_coefficient,
    pfq_numeric,
    pfq_terminating_exact,
)

__all__ = [
    "chebyshev_poly",
    "chebyshev_u_signed",
    "p_poly_U",
    "p_poly_U_hyper",
    "mellin_U_closed",
    "mellin_T_closed",
    "mellin_ratio_prop4",
    "mellin_ratio_closed",
    "lemma6_eval",
    "lemma8b_value_rep",
    "mellin_u_rep",
    "verify_lemma3",
    "verify_generating_functions",
    "corollary2_check",
    "verify_composition_identities",
    "verify_lemma7",
    "verify_lemma9",
    "lemma10_check",
    "lemma11_check",
    "pell_morgan_voyce",
]

_X = "x"
_HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# Chebyshev polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def chebyshev_poly(kind: str, n: int) -> RatPoly:
    """U_n or T_n by the three-term recursion; integer coefficients."""
    if kind not in ("U", "T"):
        raise ValueError("kind must be 'U' or 'T'")
    if n < 0:
        raise ValueError("index must be a natural number")
    if n == 0:
        return RatPoly([1], _X)
    if n == 1:
        return RatPoly([0, 2], _X) if kind == "U" else RatPoly([0, 1], _X)
    two_x = RatPoly([0, 2], _X)
    return two_x * chebyshev_poly(kind, n - 1) - chebyshev_poly(kind, n - 2)


def chebyshev_u_signed(n: int) -> RatPoly:
    """U_n extended to negative index by U_{-n} = -U_{n-2} (U_{-1} = 0)."""
    if n >= 0:
        return chebyshev_poly("U", n)
    if n == -1:
        return RatPoly.zero(_X)
    return -chebyshev_poly("U", -n - 2)


# ---------------------------------------------------------------------------
# U-family polynomial factors and closed form
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def p_poly_U(n: int) -> RatPoly:
    """Polynomial factor of the U-family transform, rational normalization.

    Base cases p_0 = 1/2, p_1 = 1; for n even
    p_n(s) = s p_{n-1}(s+1) - (1/2)(s + n - 1/2) p_{n-2}(s), and with the
    leading factor s replaced by 2 for n odd.  Degree floor(n/2).
    """
    if n == 0:
        return RatPoly([_HALF])
    if n == 1:
        return RatPoly([1])
    prev = p_poly_U(n - 1).shift(1)
    tail = RatPoly([n - _HALF, 1]) * p_poly_U(n - 2) * _HALF
    if n % 2 == 0:
        return RatPoly([0, 1]) * prev - tail
    return prev.scale(2) - tail


@lru_cache(maxsize=None)
def _cleared_3f2_poly(n: int, top: Rat, bottom: Rat) -> RatPoly:
    """Gamma((s+n)/2)/Gamma((s+eps)/2) x 3F2(top, (1-n)/2, -n/2; bottom,
    1 - (n+s)/2; 1) assembled term-by-term so the s-dependent denominator
    Pochhammers cancel into the Gamma-ratio product.  Degree floor(n/2)."""
    eps = n % 2
    half_deg = n // 2
    total = RatPoly.zero()
    coef = Fraction(1)
    for k in range(half_deg + 1):
        if coef != 0:
            partial = RatPoly([1])
            for j in range(half_deg - k):
                partial = partial * RatPoly([Fraction(eps, 2) + j, _HALF])
            total = total + partial.scale(coef * (-1) ** k)
        num = (top + k) * (Fraction(1 - n, 2) + k) * (Fraction(-n, 2) + k)
        den = (bottom + k) * (k + 1)
        if den == 0:
            raise ZeroDivisionError("denominator parameter pole in cleared 3F2")
        coef = coef * num / den
    return total


def p_poly_U_hyper(n: int) -> RatPoly:
    """The same polynomial factor from the terminating 3F2(1) closed form
    ((n+1)/2 prefactor, parameters 3/4 and 3/2); equals p_poly_U exactly."""
    return _cleared_3f2_poly(n, Fraction(3, 4), Fraction(3, 2)).scale(Fraction(n + 1, 2))


def mellin_U_closed(n: int) -> MellinClosedForm:
    """Closed form: Gamma(3/4) p_n(s) Gamma((s+eps)/2) / Gamma(s/2 + (2n+3)/4)."""
    eps = n % 2
    return MellinClosedForm(
        family="U",
        n=n,
        lam=None,
        epsilon=eps,
        poly=p_poly_U(n),
        const=ConstClass(GAMMA_34, Fraction(1)),
        gamma_num_offset=Fraction(eps, 2),
        gamma_den_offset=Fraction(2 * n + 3, 4),
    )


# ---------------------------------------------------------------------------
# T-family closed form
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _t_raw_poly(n: int) -> RatPoly:
    """P_n with M_n^T(s) = sqrt(pi) P_n(s) Gamma((s+eps)/2)/Gamma((s+n+3)/2),
    built by the mixed recursion M_n = 2 M_{n-1}(s+1) - M_{n-2}(s) from
    P_0 = P_1 = 1/4 after telescoping the Gamma ratios."""
    if n in (0, 1):
        return RatPoly([Fraction(1, 4)])
    prev = _t_raw_poly(n - 1).shift(1)
    tail = RatPoly([Fraction(n + 1, 2), _HALF]) * _t_raw_poly(n - 2)
    if n % 2 == 0:
        return RatPoly([0, 1]) * prev - tail
    return prev.scale(2) - tail


def mellin_T_closed(n: int) -> MellinClosedForm:
    """Closed form of the T-family transform, monic polynomial factor.

    The rational constant is the one forced by the recursion and base
    cases, sqrt(pi)/(4 * 2^floor(n/2)); the linear factors have the exact
    integer roots {parity-matched integers <= n-3} plus n^2 - 1.
    """
    raw = _t_raw_poly(n)
    return MellinClosedForm(
        family="T",
        n=n,
        lam=None,
        epsilon=n % 2,
        poly=raw.monic(),
        const=ConstClass(SQRT_PI, raw.leading()),
        gamma_num_offset=Fraction(n % 2, 2),
        gamma_den_offset=Fraction(n + 3, 2),
    )


def prop7_expected_roots(n: int) -> list[Rat]:
    """{n^2 - 1} plus the integers of parity n-1 from 1 or 2 up to n-3."""
    if n < 2:
        return []
    start = 2 if n % 2 == 1 else 1
    roots = [Fraction(r) for r in range(start, n - 2, 2)]
    roots.append(Fraction(n * n - 1))
    return sorted(roots)


# ---------------------------------------------------------------------------
# Hypergeometric ratio forms (terminating 3F2 with M_0 factored out)
# ---------------------------------------------------------------------------

def mellin_ratio_prop4(n: int, s) -> Rat:
    """Exact M_n(s)/M_0(s) for n even, M_n(s)/M_0(s+1) for n odd, via the
    terminating 3F2(1) representations with alternating sign."""
    s = Fraction(s)
    if n % 2 == 0:
        k = n // 2
        series = HyperSeries(
            [Fraction(-k), Fraction(k + 1), s / 2],
            [(2 * s + 3) / 4, _HALF],
        )
        return (-1) ** k * pfq_terminating_exact(series)
    k = (n - 1) // 2
    series = HyperSeries(
        [Fraction(-k), Fraction(k + 2), (s + 1) / 2],
        [(2 * s + 5) / 4, Fraction(3, 2)],
    )
    return 2 * (-1) ** k * (k + 1) * pfq_terminating_exact(series)


def mellin_ratio_closed(n: int, s) -> Rat:
    """The same ratio from the closed form by telescoping Gamma(z+1) = z Gamma(z)."""
    s = Fraction(s)
    p = p_poly_U(n)(s)
    start = Fraction(3, 4) if n % 2 == 0 else Fraction(5, 4)
    steps = n // 2 if n % 2 == 0 else (n - 1) // 2
    den = Fraction(1)
    for i in range(steps):
        den *= s / 2 + start + i
    if den == 0:
        raise ZeroDivisionError(f"telescoping pole at s = {s}")
    return 2 * p / den


# ---------------------------------------------------------------------------
# Evaluation routes for identities at rational s: exact Gamma-ratio values
# ---------------------------------------------------------------------------

def mellin_u_rep(n: int, s, shift=0) -> GammaRatioValue:
    """M_n(s + shift) as an exact Gamma-ratio value (Gamma(3/4) factored out).

    Negative indices follow U_{-n} = -U_{n-2} (so M_{-1} = 0); shift must
    be a rational with the substitution done exactly.
    """
    s = Fraction(s)
    shift = Fraction(shift)
    sign = 1
    if n < 0:
        if n == -1:
            return GammaRatioValue(Fraction(0), s / 2, s / 2)
        sign, n = -1, -n - 2
    rep = mellin_U_closed(n).rational_rep(s, shift)
    return rep * sign if sign == -1 else rep


def _sum_matches(lhs: list[GammaRatioValue], rhs: list[GammaRatioValue]) -> bool:
    diff = lhs + [v * Fraction(-1) for v in rhs]
    return combine_gamma_values(diff) == 0


def verify_lemma3(n: int, m: int, k: int, s) -> bool:
    """Exact check of the two index-shift expansions:

    (a)  M_n(s+m) = 2^-m sum_r C(m,r) M_{m+n-2r}(s)
    (b)  M_n(s)   = sum_r (-1)^{k-r} C(k,r) 2^r M_{n-2k+r}(s+r)
    """
    s = Fraction(s)
    lhs_a = [mellin_u_rep(n, s, m)]
    rhs_a = [
        mellin_u_rep(m + n - 2 * r, s) * Fraction(comb(m, r), 2**m)
        for r in range(m + 1)
    ]
    ok_a = _sum_matches(lhs_a, rhs_a)
    lhs_b = [mellin_u_rep(n, s)]
    rhs_b = [
        mellin_u_rep(n - 2 * k + r, s, r) * (Fraction(-1) ** (k - r) * comb(k, r) * 2**r)
        for r in range(k + 1)
    ]
    return ok_a and _sum_matches(lhs_b, rhs_b)


def lemma8b_value_rep(n: int, s) -> GammaRatioValue:
    """M_n(s) via the second terminating 3F2 form,
    2^{n-1} Gamma(3/4) Gamma((n+s)/2)/Gamma((n+s)/2+3/4)
    x 3F2((1-n)/2, -n/2, 1/4-(n+s)/2; -n, 1-(n+s)/2; 1),
    as an exact Gamma-ratio value for cross-checking the recursion route.
    """
    s = Fraction(s)
    if n == 0:
        f32 = Fraction(1)
    else:
        series = HyperSeries(
            [Fraction(1 - n, 2), Fraction(-n, 2), Fraction(1, 4) - (n + s) / 2],
            [Fraction(-n), 1 - (n + s) / 2],
        )
        f32 = pfq_terminating_exact(series)
    coef = Fraction(2) ** (n - 1) * f32
    return GammaRatioValue(coef, (n + s) / 2, (n + s) / 2 + Fraction(3, 4))


# ---------------------------------------------------------------------------
# Lemma 6 evaluation (3F2 forms with 4^k Gamma-ratio prefactors)
# ---------------------------------------------------------------------------

def lemma6_eval(n: int, s, precision_bits: int = 256):
    """M_n(s) for complex s via the explicit even/odd terminating 3F2 forms."""
    with mp.workprec(precision_bits + 16):
        sm = to_mp(s)
        if n % 2 == 0:
            k = n // 2
            pref = (
                mp.gamma(mpf(3) / 4) / 2
                * mpf(4) ** k
                * mp.gamma(k + sm / 2)
                / mp.gamma(k + (2 * sm + 3) / 4)
            )
            series = HyperSeries(
                [mpf(1) / 2 - k, -k - sm / 2 + mpf(1) / 4, Fraction(-k)],
                [1 - sm / 2 - k, mpf(-2 * k)],
            )
        else:
            k = (n - 1) // 2
            pref = (
                mp.gamma(mpf(3) / 4)
                * mpf(4) ** k
                * mp.gamma(k + (sm + 1) / 2)
                / mp.gamma(k + (2 * sm + 5) / 4)
            )
            series = HyperSeries(
                [mpf(-1) / 2 - k, -k - sm / 2 - mpf(1) / 4, Fraction(-k)],
                [(1 - sm) / 2 - k, mpf(-1 - 2 * k)],
            )
        return +(pref * pfq_numeric(series, precision_bits))


# ---------------------------------------------------------------------------
# Generating functions
# ---------------------------------------------------------------------------

def _mp_rat(q: Rat):
    return mpf(q.numerator) / q.denominator


def gen_series_coefficients_U(s: Rat, order: int, precision_bits: int = 256) -> list:
    """t-coefficients of the closed generating-function right side for the
    U family: even part (1+t^2)^{-1} 2F1(1, s/2; (2s+3)/4; w), odd part
    2t (1+t^2)^{-2} 2F1(1, (s+1)/2; (2s+5)/4; w), w = 4t^2/(1+t^2)^2,
    with the rational cores expanded exactly and Gamma prefactors numeric."""
    s = Fraction(s)
    with mp.workprec(precision_bits + 16):
        even_pref = mp.gamma(mpf(3) / 4) / 2 * mp.gamma(_mp_rat(s / 2)) / mp.gamma(
            _mp_rat(s / 2) + mpf(3) / 4
        )
        odd_pref = mp.gamma(mpf(3) / 4) * mp.gamma(_mp_rat((s + 1) / 2)) / mp.gamma(
            _mp_rat(s / 2) + mpf(5) / 4
        )
        out = []
        for k in range(order + 1):
            m = k // 2
            if k % 2 == 0:
                core = expansion_coefficient(1, [1, s / 2], [(2 * s + 3) / 4], m)
                out.append(+(even_pref * _mp_rat(core)))
            else:
                core = expansion_coefficient(2, [1, (s + 1) / 2], [(2 * s + 5) / 4], m)
                out.append(+(odd_pref * _mp_rat(core)))
        return out


def gen_series_coefficients_T(s: Rat, order: int, precision_bits: int = 256) -> list:
    """t-coefficients of the closed T-family generating function (the
    (1-t^2) factor makes coefficient k the difference of adjacent cores);
    coefficient 0 targets M_0^T(s) and coefficient k >= 1 targets 2 M_k^T(s)."""
    s = Fraction(s)
    with mp.workprec(precision_bits + 16):
        even_pref = mp.sqrt(mp.pi) / 4 * mp.gamma(_mp_rat(s / 2)) / mp.gamma(
            _mp_rat((s + 3) / 2)
        )
        odd_pref = mp.sqrt(mp.pi) / 4 * mp.gamma(_mp_rat((s + 1) / 2)) / mp.gamma(
            _mp_rat(s / 2) + 2
        )
        out = []
        for k in range(order + 1):
            m = k // 2
            if k % 2 == 0:
                core = expansion_coefficient(1, [1, s / 2], [(s + 3) / 2], m)
                if m >= 1:
                    core -= expansion_coefficient(1, [1, s / 2], [(s + 3) / 2], m - 1)
                out.append(+(even_pref * _mp_rat(core)))
            else:
                core = expansion_coefficient(2, [1, (s + 1) / 2], [(s + 4) / 2], m)
                if m >= 1:
                    core -= expansion_coefficient(2, [1, (s + 1) / 2], [(s + 4) / 2], m - 1)
                out.append(+(2 * odd_pref * _mp_rat(core)))
        return out


def verify_generating_functions(
    family: str,
    s,
    order: int = 12,
    precision_bits: int = 256,
    cor2_t: Optional[Rat] = Fraction(1, 10),
):
    """Max relative deviation between the closed generating-function series
    and the recursion-built transforms, coefficient by coefficient.

    For the U family the summation-rearrangement identity is also checked
    at the small rational t (skipped when cor2_t is None).  Deviations are
    measured against the largest target magnitude so exact zeros among the
    targets do not blow up the ratio.
    """
    if order > 24:
        raise ValueError("order above 24 is not supported")
    s = Fraction(s)
    with mp.workprec(precision_bits + 16):
        if family == "U":
            coeffs = gen_series_coefficients_U(s, order, precision_bits)
            targets = [mellin_U_closed(k).evaluate(s, precision_bits) for k in range(order + 1)]
        elif family == "T":
            coeffs = gen_series_coefficients_T(s, order, precision_bits)
            targets = [mellin_T_closed(k).evaluate(s, precision_bits) for k in range(order + 1)]
            targets = [targets[0]] + [2 * t for t in targets[1:]]
        else:
            raise ValueError("family must be 'U' or 'T'")
        scale = max(abs(t) for t in targets)
        dev = max(abs(c - t) / scale for c, t in zip(coeffs, targets))
        if family == "U" and cor2_t is not None:
            dev = max(dev, corollary2_check(s, cor2_t, precision_bits)[0])
        return +dev


def gen_function_direct(s, t, precision_bits: int = 256):
    """G(t, s) for the U family from its two-part 2F1 closed form."""
    with mp.workprec(precision_bits + 16):
        sm, tm = to_mp(s), to_mp(t)
        w = 4 * tm * tm / (1 + tm * tm) ** 2
        h1 = pfq_numeric(HyperSeries([mpf(1), sm / 2], [(2 * sm + 3) / 4], w), precision_bits)
        h2 = pfq_numeric(
            HyperSeries([mpf(1), (sm + 1) / 2], [(2 * sm + 5) / 4], w), precision_bits
        )
        g34 = mp.gamma(mpf(3) / 4)
        return +(
            1 / (1 + tm * tm) * g34 / 2 * (
                mp.gamma(sm / 2) / mp.gamma(sm / 2 + mpf(3) / 4) * h1
                + 2 * tm / (1 + tm * tm)
                * mp.gamma((sm + 1) / 2) / mp.gamma(sm / 2 + mpf(5) / 4) * h2
            )
        )


def corollary2_check(s, t, precision_bits: int = 256, max_k: int = 80):
    """Compare the rearranged double series (terminating 3F2's in 4/t^2
    with alternating t^{2k} weights) against the direct closed form G(t,s).

    Returns (relative deviation, converged flag).  The k-sum is truncated
    once three consecutive term pairs fall below the working tolerance;
    failure to get there within max_k flags non-convergence (|t| too big).
    """
    s, t = Fraction(s), Fraction(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    with mp.workprec(precision_bits + 16):
        direct = gen_function_direct(s, t, precision_bits)
        a_pref = mp.gamma(_mp_rat(s / 2)) / mp.gamma(_mp_rat(s / 2) + mpf(3) / 4)
        b_pref = mp.gamma(_mp_rat((s + 1) / 2)) / mp.gamma(_mp_rat(s / 2) + mpf(5) / 4)
        z = 4 / t**2
        total = mpf(0)
        eps = mpf(2) ** (-(precision_bits // 2))
        quiet = 0
        converged = False
        for k in range(max_k + 1):
            f1 = pfq_terminating_exact(
                HyperSeries(
                    [Fraction(1 - k, 2), s / 2, Fraction(-k, 2)],
                    [_HALF, (2 * s + 3) / 4],
                    z,
                )
            )
            term = a_pref * _mp_rat(Fraction(-1) ** k * t ** (2 * k) * f1)
            if k >= 1:
                f2 = pfq_terminating_exact(
                    HyperSeries(
                        [Fraction(1 - k, 2), 1 - Fraction(k, 2), (s + 1) / 2],
                        [Fraction(3, 2), (2 * s + 5) / 4],
                        z,
                    )
                )
                term -= b_pref * _mp_rat(Fraction(-1) ** k * t ** (2 * k) * Fraction(2 * k) / t * f2)
            total += term
            if abs(term) < eps * max(abs(total), mpf(1)):
                quiet += 1
                if quiet >= 3:
                    converged = True
                    break
            else:
                quiet = 0
        value = mp.gamma(mpf(3) / 4) / 2 * total
        return +(abs(value - direct) / abs(direct)), converged


# ---------------------------------------------------------------------------
# Composition / product identities and the other polynomial suites
# ---------------------------------------------------------------------------

def verify_composition_identities(m: int, n: int) -> bool:
    """Exact polynomial identities:

    U_{mn-1}(x) = U_{m-1}(T_n(x)) U_{n-1}(x) = U_{n-1}(T_m(x)) U_{m-1}(x);
    T_n(x) U_{m-1}(x) = (1/2)(U_{m+n-1}(x) + U_{m-n-1}(x)) with the
    negative-index convention; and 2u U_n(2u^2 - 1) = U_{2n+1}(u).
    """
    if m < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    u = chebyshev_poly("U", m * n - 1)
    comp1 = chebyshev_poly("U", m - 1).compose(chebyshev_poly("T", n)) * chebyshev_poly("U", n - 1)
    comp2 = chebyshev_poly("U", n - 1).compose(chebyshev_poly("T", m)) * chebyshev_poly("U", m - 1)
    ok = u == comp1 == comp2
    prod = chebyshev_poly("T", n) * chebyshev_poly("U", m - 1)
    half_sum = (chebyshev_u_signed(m + n - 1) + chebyshev_u_signed(m - n - 1)).scale(_HALF)
    ok = ok and prod == half_sum
    doubling = RatPoly([0, 2], _X) * chebyshev_poly("U", n).compose(RatPoly([-1, 0, 2], _X))
    return ok and doubling == chebyshev_poly("U", 2 * n + 1)


def verify_lemma7(n: int) -> bool:
    """The three finite-sum quadratic-transform expansions, exactly."""
    x = RatPoly([0, 1], _X)
    x2m1 = RatPoly([-1, 0, 1], _X)

    def power_sum(binom_fn, top: int) -> RatPoly:
        total = RatPoly.zero(_X)
        for k in range(top // 2 + 1):
            term = RatPoly([binom_fn(k)], _X)
            for _ in range(k):
                term = term * x2m1
            for _ in range(top - 2 * k):
                term = term * x
            total = total + term
        return total

    ok_a = power_sum(lambda k: comb(n + 1, 2 * k + 1), n) == chebyshev_poly("U", n)
    total_b = RatPoly.zero(_X)
    for k in range(n // 2 + 1):
        term = RatPoly([Fraction((-1) ** k * comb(n - k, k)) * Fraction(2) ** (n - 2 * k)], _X)
        for _ in range(n - 2 * k):
            term = term * x
        total_b = total_b + term
    ok_b = total_b == chebyshev_poly("U", n)
    ok_c = power_sum(lambda k: comb(n, 2 * k), n) == chebyshev_poly("T", n)
    return ok_a and ok_b and ok_c


def verify_lemma9(x, t, j: int = 1, precision_bits: int = 256, terms: int = 64) -> bool:
    """Factorially-weighted generating functions for U_n, checked numerically.

    j = 1 is the exponential/sine form; general j >= 1 uses the pair of
    0F_{j-1} values at conjugate arguments.  |x| < 1 and t != 0 required.
    """
    x, t = Fraction(x), Fraction(t)
    if abs(x) == 1 and j == 1:
        pass  # the sine factor degenerates to its t-limit; handled below
    elif abs(x) >= 1:
        raise ValueError("|x| < 1 required")
    if t == 0 or j < 1:
        raise ValueError("t must be nonzero, j >= 1")
    with mp.workprec(precision_bits + 16):
        xm, tm = _mp_rat(x), _mp_rat(t)
        lhs = mpf(0)
        for nn in range(terms):
            lhs += chebyshev_poly("U", nn)(xm) * tm**nn / mp.factorial(nn + 1) ** j
        if abs(x) == 1:
            rhs = mp.exp(xm * tm)  # sin(t u)/(t u) -> 1 as the root u -> 0
            tol = mpf(2) ** (-(precision_bits // 4))
            return abs(lhs - rhs) / max(abs(rhs), mpf(1)) < tol
        root = mp.sqrt(1 - xm * xm)
        if j == 1:
            rhs = mp.exp(xm * tm) / tm * mp.sin(tm * root) / root
        else:
            y = mp.acos(xm)
            up = pfq_numeric(
                HyperSeries([], [mpf(1)] * (j - 1), mp.exp(-1j * y) * tm), precision_bits
            )
            dn = pfq_numeric(
                HyperSeries([], [mpf(1)] * (j - 1), mp.exp(1j * y) * tm), precision_bits
            )
            rhs = mpc(0, 1) / (2 * tm * root) * (up - dn)
        tol = mpf(2) ** (-(precision_bits // 4))
        return abs(lhs - rhs) / max(abs(rhs), mpf(1)) < tol


def lemma10_check(r, q, n: int) -> bool:
    """Exact weighted-moment identity

        int_0^1 x^r (1-x)^q U_n(x) dx
          = (n+1) B(r+1, q+1) 3F2(n+2, -n, q+1; 3/2, q+r+2; 1/2),

    both sides reduced to rationals relative to B(r+1, q+1) via the
    term-by-term Beta integrals of the monomials of U_n.
    """
    r, q = Fraction(r), Fraction(q)
    if r <= -1 or q <= -1:
        raise ValueError("need r > -1 and q > -1")
    u = chebyshev_poly("U", n)
    lhs = Fraction(0)
    shift = Fraction(1)
    for k, c in enumerate(u.coeffs):
        if k > 0:
            shift *= (r + k) / (r + q + 1 + k)
        lhs += c * shift
    series = HyperSeries(
        [Fraction(n + 2), Fraction(-n), q + 1],
        [Fraction(3, 2), q + r + 2],
        _HALF,
    )
    rhs = (n + 1) * pfq_terminating_exact(series)
    return lhs == rhs


def lemma11_check(n: int, s, precision_bits: int = 256):
    """Double-sum representation of the U-family transform vs. the closed
    form.  The inner non-terminating 3F2(1) values (positive excess
    j + 3/4) are delegated to mpmath's accelerated evaluation, which is
    outside the adaptive direct-summation contract.  Returns the relative
    deviation."""
    s = Fraction(s)
    with mp.workprec(precision_bits + 32):
        sm = _mp_rat(s)
        total = mpf(0)
        coef = mpf(n + 1)
        for j in range(n + 1):
            c = (
                _mp_rat(pochhammer(n + 2, j) * pochhammer(Fraction(-n), j))
                / (_mp_rat(pochhammer(Fraction(3, 2), j)) * mpf(2) ** j * sm * _mp_rat(pochhammer(s + 1, j)))
            )
            inner = mpmath.hyper(
                [mpf(1) / 4, (sm + 1) / 2, sm / 2],
                [(sm + j + 1) / 2, (sm + j) / 2 + 1],
                1,
            )
            total += c * inner
        value = coef * total
        target = mellin_U_closed(n).evaluate(s, precision_bits)
        return +(abs(value - target) / abs(target))


# ---------------------------------------------------------------------------
# Pell and Morgan-Voyce reductions
# ---------------------------------------------------------------------------

def pell_morgan_voyce(kind: str, n: int) -> RatPoly:
    """Pell and Morgan-Voyce polynomials as shifted/scaled Chebyshev forms.

    pell:  p~_n(x) = x (-i)^{n-1} U_{n-1}(ix), realized with the exact
           real coefficients (n >= 1).
    mv_B:  B_n(x) = U_n(x/2 + 1), B_0 = 1.
    mv_b:  b_n(x) = U_n(x/2 + 1) - U_{n-1}(x/2 + 1), b_0 = 1.
    """
    if kind == "pell":
        if n < 1:
            raise ValueError("Pell index starts at 1")
        u = chebyshev_poly("U", n - 1)
        out = [Fraction(0)] * (u.degree + 2)
        for k, c in enumerate(u.coeffs):
            if c == 0:
                continue
            # i^(k-(n-1)) with k = n-1 (mod 2) is (-1)^((k-n+1)/2)
            out[k + 1] = c * Fraction(-1) ** ((k - n + 1) // 2)
        return RatPoly(out, _X)
    shifted = RatPoly([1, _HALF], _X)
    if kind == "mv_B":
        return RatPoly([1], _X) if n == 0 else chebyshev_poly("U", n).compose(shifted)
    if kind == "mv_b":
        if n == 0:
            return RatPoly([1], _X)
        return (chebyshev_poly("U", n) - chebyshev_poly("U", n - 1)).compose(shifted)
    raise ValueError("kind must be 'pell', 'mv_b', or 'mv_B'")
