"""Exact rational building blocks: Pochhammer symbols, univariate polynomials
over Q, and truncated formal power series.

Everything in this module is immutable and exact.  Coefficients are
``fractions.Fraction`` throughout; no floating point enters here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

Rat = Fraction

__all__ = [
    "Rat",
    "rat_from_str",
    "rat_to_str",
    "pochhammer",
    "RatPoly",
    "poly_shift",
    "poly_reflect",
    "FormalSeries",
    "series_compose_rational",
]


def rat_from_str(s: str) -> Rat:
    """Parse ``"num/den"`` (or a bare integer) into a Fraction."""
    return Fraction(s.strip())


def rat_to_str(q: Rat) -> str:
    """Serialize a Fraction as ``"num/den"`` in lowest terms, integers bare."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def pochhammer(a, k: int) -> Rat:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer order must be a natural number")
    out = Fraction(1)
    a = Fraction(a)
    for i in range(k):
        out *= a + i
    return out


def _as_rat_tuple(coeffs: Iterable) -> tuple[Rat, ...]:
    out = tuple(Fraction(c) for c in coeffs)
    # strip trailing zeros but keep at least the constant term
    n = len(out)
    while n > 1 and out[n - 1] == 0:
        n -= 1
    return out[:n]


@dataclass(frozen=True)
class RatPoly:
    """Univariate polynomial over Q, ascending coefficients.

    The highest stored coefficient is nonzero unless the polynomial is
    identically zero (stored as a single zero coefficient).
    """

    coeffs: tuple[Rat, ...]
    var: str = "s"

    def __init__(self, coeffs: Iterable, var: str = "s"):
        object.__setattr__(self, "coeffs", _as_rat_tuple(coeffs))
        object.__setattr__(self, "var", var)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var: str = "s") -> "RatPoly":
        return cls([0], var)

    @classmethod
    def constant(cls, c, var: str = "s") -> "RatPoly":
        return cls([c], var)

    @classmethod
    def identity(cls, var: str = "s") -> "RatPoly":
        """The polynomial p(x) = x."""
        return cls([0, 1], var)

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1, var: str = "s") -> "RatPoly":
        p = cls.constant(lead, var)
        for r in roots:
            p = p * cls([-Fraction(r), 1], var)
        return p

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def leading(self) -> Rat:
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Rat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def monic(self) -> "RatPoly":
        lead = self.leading()
        if lead == 0:
            return self
        return RatPoly([c / lead for c in self.coeffs], self.var)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)], self.var
        )

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)], self.var
        )

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs], self.var)

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            if self.is_zero() or other.is_zero():
                return RatPoly.zero(self.var)
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RatPoly(out, self.var)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "RatPoly":
        c = Fraction(c)
        return RatPoly([c * a for a in self.coeffs], self.var)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- evaluation and substitution ----------------------------------

    def __call__(self, x):
        """Horner evaluation; works for Fraction, int, complex, mpf/mpc."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def shift(self, a) -> "RatPoly":
        """Exact substitution p(x) -> p(x + a)."""
        a = Fraction(a)
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            ap = Fraction(1)
            for j in range(i, -1, -1):
                out[j] += c * comb(i, j) * ap
                ap *= a
        return RatPoly(out, self.var)

    def reflect(self) -> "RatPoly":
        """Exact substitution p(x) -> p(1 - x)."""
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j in range(i + 1):
                out[j] += c * comb(i, j) * (-1) ** j
        return RatPoly(out, self.var)

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """Exact substitution p(q(x))."""
        acc = RatPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + RatPoly.constant(c, inner.var)
        return acc

    def derivative(self) -> "RatPoly":
        if self.degree == 0:
            return RatPoly.zero(self.var)
        return RatPoly(
            [i * c for i, c in enumerate(self.coeffs)][1:], self.var
        )

    def divmod(self, divisor: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Exact polynomial long division: self = q * divisor + r."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = divisor.degree
        dl = divisor.leading()
        q = [Fraction(0)] * max(len(rem) - dn, 1)
        for i in range(len(rem) - 1, dn - 1, -1):
            f = rem[i] / dl
            q[i - dn] = f
            if f != 0:
                for j, b in enumerate(divisor.coeffs):
                    rem[i - dn + j] -= f * b
        return RatPoly(q, self.var), RatPoly(rem[:dn] or [0], self.var)

    def exact_div(self, divisor: "RatPoly") -> "RatPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ValueError("polynomial division left a nonzero remainder")
        return q

    def __repr__(self):
        terms = " + ".join(
            f"({rat_to_str(c)}){self.var}^{i}" for i, c in enumerate(self.coeffs) if c != 0
        )
        return f"RatPoly[{terms or '0'}]"

    def to_str_coeffs(self) -> list[str]:
        return [rat_to_str(c) for c in self.coeffs]


def poly_shift(p: RatPoly, a) -> RatPoly:
    """q with q(s) = p(s + a), exactly."""
    return p.shift(a)


def poly_reflect(p: RatPoly) -> RatPoly:
    """q with q(s) = p(1 - s), exactly."""
    return p.reflect()


class TruncationOrderError(ValueError):
    """Requested a series coefficient beyond the tracked truncation order."""


@dataclass(frozen=True)
class FormalSeries:
    """Truncated formal power series with explicit truncation order.

    Coefficients 0..order are valid; anything beyond is unknown and access
    raises.  Arithmetic tracks the minimum truncation order of the operands.
    Coefficients are Fractions in the exact paths, but any ring element
    (e.g. an mpmath value) is accepted.
    """

    coeffs: tuple
    order: int

    def __init__(self, coeffs: Iterable, order: int):
        coeffs = tuple(coeffs)
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        coeffs = coeffs[: order + 1]
        if len(coeffs) < order + 1:
            coeffs = coeffs + (Fraction(0),) * (order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    @classmethod
    def one(cls, order: int) -> "FormalSeries":
        return cls([Fraction(1)], order)

    def coefficient(self, k: int):
        if k > self.order:
            raise TruncationOrderError(
                f"coefficient {k} beyond truncation order {self.order}"
            )
        return self.coeffs[k]

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        order = min(self.order, other.order)
        return FormalSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        order = min(self.order, other.order)
        return FormalSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(order + 1)], order
        )

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            order = min(self.order, other.order)
            out = [Fraction(0)] * (order + 1)
            for i in range(order + 1):
                a = self.coeffs[i]
                if a == 0:
                    continue
                for j in range(order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
            return FormalSeries(out, order)
        return FormalSeries([other * c for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def agrees_with(self, other: "FormalSeries") -> bool:
        """Coefficient equality up to the common truncation order."""
        order = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(order + 1))


def binomial_series(exponent, order: int) -> FormalSeries:
    """(1 + v)^exponent as a truncated series in v, exact coefficients."""
    e = Fraction(exponent)
    out = [Fraction(1)]
    for i in range(order):
        out.append(out[-1] * (e - i) / (i + 1))
    return FormalSeries(out, order)


def series_compose_rational(a, b, c, e: int, order: int) -> FormalSeries:
    """Exact t-expansion of (1+t^2)^(-e) * 2F1(a, b; c; 4 t^2 / (1+t^2)^2).

    Computed by formal substitution: each 2F1 term contributes
    4^j v^j (1+v)^(-2j-e) with v = t^2, expanded binomially and summed.
    This is the independent series oracle for the closed coefficient
    formulas; it never consults them.

    Returns a series in t of the given truncation order (odd coefficients
    are zero since the function is even in t).
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c <= 0 and c.denominator == 1:
        raise ValueError("denominator parameter c must not be a non-positive integer")
    if e not in (1, 2):
        raise ValueError("prefactor exponent e must be 1 or 2")
    m_order = order // 2
    out_v = [Fraction(0)] * (m_order + 1)
    term = Fraction(1)
    for j in range(m_order + 1):
        if term != 0:
            contrib = term * Fraction(4) ** j
            # (1+v)^(-2j-e) expanded through v^(m_order-j)
            binv = Fraction(1)
            for l in range(m_order + 1 - j):
                out_v[j + l] += contrib * binv
                binv *= Fraction(-2 * j - e - l) / (l + 1)
        term *= (a + j) * (b + j) / ((c + j) * (j + 1))
    out_t = [Fraction(0)] * (order + 1)
    for m, v in enumerate(out_v):
        if 2 * m <= order:
            out_t[2 * m] = v
    return FormalSeries(out_t, order)
