"""Generalized hypergeometric machinery.

Exact summation of terminating pFq series over Q, adaptive arbitrary
precision summation for convergent non-terminating series, the
Chu-Vandermonde closed form, the terminating-series Thomae relation, the
seven standard transformations of a terminating 3F2(1), and the closed
coefficient formulas for expansions of (1+t^2)^(-e) 2F1(a,b;c;4t^2/(1+t^2)^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from mpmath import mp, mpc, mpf

from .exact import Rat, pochhammer, series_compose_rational

__all__ = [
    "HyperSeries",
    "TransformResult",
    "AppendixTransform",
    "PoleBeforeTerminationError",
    "DivergentSeriesError",
    "pfq_terminating_exact",
    "pfq_numeric",
    "chu_vandermonde",
    "thomae_shift",
    "thomae_transform",
    "appendix_transforms",
    "lemma5_coefficient",
]


class PoleBeforeTerminationError(ArithmeticError):
    """A denominator Pochhammer vanishes at an index <= the termination index."""


class DivergentSeriesError(ArithmeticError):
    """Non-terminating series outside its convergence domain."""


def _is_nonpositive_int(x) -> bool:
    return isinstance(x, (int, Fraction)) and Fraction(x).denominator == 1 and x <= 0


@dataclass(frozen=True)
class HyperSeries:
    """Parameter lists plus argument of a pFq series.

    Parameters may be Fractions/ints (exact paths) or mpmath values
    (numeric paths).  A terminating series carries at least one numerator
    parameter equal to a non-positive integer -n; no denominator parameter
    may be a non-positive integer -m with m < n.
    """

    numerator: tuple
    denominator: tuple
    argument: object = Fraction(1)

    def __init__(self, numerator: Sequence, denominator: Sequence, argument=Fraction(1)):
        object.__setattr__(self, "numerator", tuple(numerator))
        object.__setattr__(self, "denominator", tuple(denominator))
        object.__setattr__(self, "argument", argument)

    def termination_index(self) -> Optional[int]:
        """Smallest n with -n among the numerator parameters, else None."""
        hits = [-int(Fraction(a)) for a in self.numerator if _is_nonpositive_int(a)]
        return min(hits) if hits else None

    def denominator_pole_index(self) -> Optional[int]:
        """Smallest m with -m among the denominator parameters, else None."""
        hits = [-int(Fraction(b)) for b in self.denominator if _is_nonpositive_int(b)]
        return min(hits) if hits else None

    def is_valid_terminating(self) -> bool:
        n = self.termination_index()
        if n is None:
            return False
        m = self.denominator_pole_index()
        return m is None or m >= n


def pfq_terminating_exact(h: HyperSeries) -> Rat:
    """Exact finite sum of a terminating pFq with rational data.

    Sums k = 0..n with n the termination index, left to right in Fraction
    arithmetic.  Raises PoleBeforeTerminationError if a denominator
    Pochhammer vanishes at an index <= n.
    """
    n = h.termination_index()
    if n is None:
        raise ValueError("series does not terminate")
    m = h.denominator_pole_index()
    if m is not None and m < n:
        raise PoleBeforeTerminationError(
            f"denominator parameter -{m} poles before termination index {n}"
        )
    nums = [Fraction(a) for a in h.numerator]
    dens = [Fraction(b) for b in h.denominator]
    z = Fraction(h.argument)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n + 1):
        total += term
        if k < n:
            for a in nums:
                term *= a + k
            for b in dens:
                term /= b + k
            term *= z
            term /= k + 1
    return total


def _to_mp(x, prec: int):
    with mp.workprec(prec):
        if isinstance(x, Fraction):
            return mpf(x.numerator) / x.denominator
        if isinstance(x, complex):
            return mpc(x.real, x.imag)
        return mp.mpmathify(x)


def pfq_numeric(h: HyperSeries, precision_bits: int = 256):
    """Arbitrary-precision value of a pFq series.

    Terminating series are summed exactly to the termination index at
    elevated working precision.  Non-terminating series are summed with
    adaptive truncation: once the observed term ratio stays below
    r = (1+|z|)/2 (p = q+1) or 1/2 (p <= q), the geometric tail bound
    |term| r/(1-r) drives the stopping rule.  Divergent input
    (p = q+1 with |z| >= 1 and no termination, or p > q+1) raises.
    """
    p, q = len(h.numerator), len(h.denominator)
    n_term = h.termination_index()
    guard = 24
    with mp.workprec(precision_bits + guard):
        nums = [_to_mp(a, precision_bits + guard) for a in h.numerator]
        dens = [_to_mp(b, precision_bits + guard) for b in h.denominator]
        z = _to_mp(h.argument, precision_bits + guard)
        if n_term is not None:
            m = h.denominator_pole_index()
            if m is not None and m < n_term:
                raise PoleBeforeTerminationError(
                    f"denominator parameter -{m} poles before termination index {n_term}"
                )
            total = mpf(0)
            term = mpf(1)
            for k in range(n_term + 1):
                total += term
                if k < n_term:
                    for a in nums:
                        term = term * (a + k)
                    for b in dens:
                        term = term / (b + k)
                    term = term * z / (k + 1)
            return +total
        # non-terminating
        if p > q + 1:
            raise DivergentSeriesError("pFq with p > q+1 diverges for z != 0")
        if p == q + 1 and abs(z) >= 1:
            raise DivergentSeriesError(
                "non-terminating series with |argument| >= 1 is not summed"
            )
        for b in dens:
            if _is_nonpositive_int_mp(b):
                raise PoleBeforeTerminationError(
                    "denominator parameter at a non-positive integer"
                )
        r_target = (1 + abs(z)) / 2 if p == q + 1 else mpf("0.5")
        eps = mpf(2) ** (-(precision_bits + 8))
        total = mpf(0)
        term = mpf(1)
        steady = 0
        k = 0
        while True:
            total += term
            nxt = term
            for a in nums:
                nxt = nxt * (a + k)
            for b in dens:
                nxt = nxt / (b + k)
            nxt = nxt * z / (k + 1)
            ratio = abs(nxt) / abs(term) if term != 0 else mpf(0)
            steady = steady + 1 if ratio < r_target else 0
            if steady >= 3 and abs(nxt) / (1 - r_target) <= eps * max(abs(total), mpf(1)):
                break
            term = nxt
            k += 1
            if k > 4_000_000:
                raise DivergentSeriesError("series did not meet the tail bound")
        return +total


def _is_nonpositive_int_mp(b) -> bool:
    try:
        return b == int(b) and b <= 0
    except (TypeError, ValueError):
        return False


def chu_vandermonde(n: int, b, c) -> Rat:
    """Gauss/Chu-Vandermonde sum: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n."""
    b, c = Fraction(b), Fraction(c)
    den = pochhammer(c, n)
    if den == 0:
        raise PoleBeforeTerminationError(f"(c)_n vanishes for c={c}, n={n}")
    return pochhammer(c - b, n) / den


@dataclass(frozen=True)
class TransformResult:
    """An exact rewriting of a terminating 3F2(1): prefactor x series."""

    prefactor: Rat
    series: HyperSeries

    def value(self) -> Rat:
        return self.prefactor * pfq_terminating_exact(self.series)


@dataclass(frozen=True)
class AppendixTransform:
    """One of the seven 3F2(1) transformations, with an applicability flag."""

    index: int
    status: str  # "ok" | "inapplicable"
    result: Optional[TransformResult] = None
    reason: str = ""


def pole_before_index(params, n: int) -> bool:
    """True when some parameter is a non-positive integer -m with m < n,
    so that its Pochhammer vanishes at an index <= n."""
    return any(
        _is_nonpositive_int(p) and -int(Fraction(p)) < n for p in params
    )


def thomae_shift(a, b, c, d, e) -> Rat:
    """The shift parameter w = d + e - a - b - c."""
    return Fraction(d) + Fraction(e) - Fraction(a) - Fraction(b) - Fraction(c)


def thomae_transform(a, b, c, d, e) -> TransformResult:
    """Thomae relation for a terminating 3F2(1), exact over Q.

    The input is 3F2(a, b, c; d, e; 1) with a = -n the terminating
    parameter.  With w = d + e - a - b - c the returned identity is

        3F2(-n, b, c; d, e; 1)
          = (b)_n (w-n)_n / ((d)_n (e)_n)
            x 3F2(-n, d-b, e-b; 1-b-n, w-n; 1),

    the terminating specialization of Thomae's two-term relation (the
    Gamma-function form of the relation does not stay rational, so the
    limit form pivoted on the second parameter is used).  n = 0 returns
    prefactor 1 and a series that sums to 1.
    """
    a, b, c, d, e = (Fraction(x) for x in (a, b, c, d, e))
    if not _is_nonpositive_int(a):
        raise ValueError("first parameter must be the terminating one (-n)")
    n = -int(a)
    if pole_before_index((d, e), n):
        raise PoleBeforeTerminationError("input series poles before index n")
    w = thomae_shift(a, b, c, d, e)
    den = pochhammer(d, n) * pochhammer(e, n)
    if den == 0:
        raise PoleBeforeTerminationError("prefactor pole in (d)_n (e)_n")
    pref = pochhammer(b, n) * pochhammer(w - n, n) / den
    series = HyperSeries([a, d - b, e - b], [1 - b - n, w - n], Fraction(1))
    if pole_before_index(series.denominator, n):
        raise PoleBeforeTerminationError("transformed series poles before index n")
    return TransformResult(pref, series)


def _poch_ratio(num_pairs, den_pairs, n: int, sign: int = 1):
    """Product of (x)_n over num_pairs divided by product over den_pairs.

    Returns None if a denominator Pochhammer vanishes.
    """
    pref = Fraction(sign)
    for x in num_pairs:
        pref *= pochhammer(x, n)
    for y in den_pairs:
        q = pochhammer(y, n)
        if q == 0:
            return None
        pref /= q
    return pref


def appendix_transforms(n: int, a, b, c, d) -> list[AppendixTransform]:
    """The seven standard transformations of 3F2(-n, a, b; c, d; 1).

    Each applicable entry satisfies, exactly,
    prefactor x transformed series = original series.  Entries whose
    prefactor or transformed series is undefined (Pochhammer zero in a
    denominator, or a denominator-parameter pole before termination) are
    flagged "inapplicable" rather than raising.
    """
    a, b, c, d = (Fraction(x) for x in (a, b, c, d))
    if pole_before_index((c, d), n):
        raise PoleBeforeTerminationError(
            "input series has a denominator pole before index n"
        )
    one = Fraction(1)
    mn = Fraction(-n)
    specs = [
        # (index, num poch, den poch, sign, transformed nums, transformed dens)
        (1, [c - a, d - a], [c, d], 1,
         [mn, a, a + b - c - d - n + 1], [a - c - n + 1, a - d - n + 1]),
        (2, [a, c + d - a - b], [c, d], 1,
         [mn, c - a, d - a], [1 - a - n, c + d - a - b]),
        (3, [c + d - a - b], [c], 1,
         [mn, d - a, d - b], [d, c + d - a - b]),
        (4, [a, b], [c, d], (-1) ** n,
         [mn, 1 - c - n, 1 - d - n], [1 - a - n, 1 - b - n]),
        (5, [d - a, d - b], [c, d], (-1) ** n,
         [mn, 1 - d - n, a + b - c - d - n + 1], [a - d - n + 1, b - d - n + 1]),
        (6, [c - a], [c], 1,
         [mn, a, d - b], [d, a - c - n + 1]),
        (7, [c - a, b], [c, d], 1,
         [mn, d - b, 1 - c - n], [1 - b - n, a - c - n + 1]),
    ]
    out = []
    for idx, nums, dens, sign, tnum, tden in specs:
        pref = _poch_ratio(nums, dens, n, sign)
        if pref is None:
            out.append(AppendixTransform(idx, "inapplicable", None, "prefactor pole"))
            continue
        series = HyperSeries([Fraction(x) for x in tnum], [Fraction(y) for y in tden], one)
        if pole_before_index(series.denominator, n):
            out.append(
                AppendixTransform(idx, "inapplicable", None, "pole before termination")
            )
            continue
        out.append(AppendixTransform(idx, "ok", TransformResult(pref, series)))
    return out


def expansion_coefficient(e, nums: Sequence, dens: Sequence, m: int) -> Rat:
    """Exact coefficient of v^m in (1+v)^(-e) pFq(nums; dens; 4v/(1+v)^2).

    The exponent e may be any rational (generating functions with
    non-integer weight exponents need e = lambda).  Summation is by
    formal substitution, independent of any closed coefficient formula.
    """
    e = Fraction(e)
    nums = [Fraction(x) for x in nums]
    dens = [Fraction(y) for y in dens]
    total = Fraction(0)
    term = Fraction(1)
    for j in range(m + 1):
        if term != 0:
            binv = Fraction(1)
            for i in range(m - j):
                binv *= Fraction(-2 * j - e - i) / (i + 1)
            total += term * Fraction(4) ** j * binv
        for x in nums:
            term *= x + j
        for y in dens:
            term /= y + j
        term /= j + 1
    return total


def lemma5_coefficient(a, b, c, m: int, variant: str = "single") -> Rat:
    """Closed form for the t^(2m) coefficient of (1+t^2)^(-e) 2F1(a,b;c;w(t)),
    w(t) = 4 t^2/(1+t^2)^2, e = 1 ("single") or e = 2 ("double"):

        4^m (a)_m (b)_m / ((c)_m m!)
          x 4F3(1/2 - m, 1-c-m, -m, -m; 1-a-m, 1-b-m, -2m; 1)        (single)
          x 4F3(-1/2 - m, 1-c-m, -m, -m; 1-a-m, 1-b-m, -1-2m; 1)     (double)

    Must equal the coefficient produced by series_compose_rational.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if _is_nonpositive_int(c):
        raise ValueError("denominator parameter c must not be a non-positive integer")
    if variant not in ("single", "double"):
        raise ValueError("variant must be 'single' or 'double'")
    cm = pochhammer(c, m)
    if cm == 0:
        raise PoleBeforeTerminationError("(c)_m vanishes")
    pref = Fraction(4) ** m * pochhammer(a, m) * pochhammer(b, m) / (cm * pochhammer(1, m))
    if m == 0:
        return pref
    if variant == "single":
        series = HyperSeries(
            [Fraction(1, 2) - m, 1 - c - m, Fraction(-m), Fraction(-m)],
            [1 - a - m, 1 - b - m, Fraction(-2 * m)],
        )
    else:
        series = HyperSeries(
            [Fraction(-1, 2) - m, 1 - c - m, Fraction(-m), Fraction(-m)],
            [1 - a - m, 1 - b - m, Fraction(-1 - 2 * m)],
        )
    return pref * pfq_terminating_exact(series)
