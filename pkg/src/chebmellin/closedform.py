"""Factored closed forms of the transforms and exact Gamma-ratio bookkeeping.

A closed form is  const x p(s) x Gamma(s/2 + num_offset) / Gamma(s/2 + den_offset)
where const is a rational multiple of one symbolic constant (Gamma(3/4),
sqrt(pi), or Gamma(lambda/2 + 1/4)) and p is an exact rational polynomial.

GammaRatioValue telescopes Gamma ratios with integer-step offsets so that
identities between transform values at rational s reduce to Fraction
equalities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from mpmath import mp, mpc, mpf

from .exact import RatPoly, Rat, pochhammer, rat_from_str, rat_to_str

__all__ = [
    "GAMMA_34",
    "SQRT_PI",
    "GAMMA_GEGEN",
    "ConstClass",
    "MellinClosedForm",
    "GammaRatioValue",
    "GammaPoleError",
    "gamma_int_ratio",
    "to_mp",
]

GAMMA_34 = "gamma_3_4"        # Gamma(3/4)
SQRT_PI = "sqrt_pi"           # sqrt(pi)
GAMMA_GEGEN = "gamma_gegen"   # Gamma(lambda/2 + 1/4)


class GammaPoleError(ArithmeticError):
    """Evaluation hit a pole of the Gamma function."""


def to_mp(q, precision_bits: Optional[int] = None):
    """Exact conversion of Fraction/int/float/complex to mpf/mpc."""
    ctx = mp.workprec(precision_bits) if precision_bits else _null_ctx()
    with ctx:
        if isinstance(q, Fraction):
            return mpf(q.numerator) / q.denominator
        if isinstance(q, complex):
            return mpc(q.real, q.imag)
        return mp.mpmathify(q)


class _null_ctx:
    def __enter__(self):
        return None

    def __exit__(self, *exc):
        return False


def gamma_int_ratio(x: Rat, y: Rat) -> Rat:
    """Exact r with Gamma(x) = r * Gamma(y), requiring x - y in Z.

    Raises GammaPoleError when the ratio is infinite (x at a pole that y
    does not share).  A zero return value means Gamma(y) poles while
    Gamma(x) does not.
    """
    x, y = Fraction(x), Fraction(y)
    d = x - y
    if d.denominator != 1:
        raise ValueError("gamma_int_ratio needs integer-separated arguments")
    m = int(d)
    if m >= 0:
        return pochhammer(y, m)
    r = pochhammer(x, -m)
    if r == 0:
        raise GammaPoleError(f"Gamma pole at argument {x}")
    return 1 / r


@dataclass(frozen=True)
class GammaRatioValue:
    """coef * Gamma(num_arg) / Gamma(den_arg) with all three rational."""

    coef: Rat
    num_arg: Rat
    den_arg: Rat

    def scaled_coef(self, base_num: Rat, base_den: Rat) -> Rat:
        """r such that value = r * Gamma(base_num)/Gamma(base_den)."""
        if self.coef == 0:
            return Fraction(0)
        r = self.coef
        r *= gamma_int_ratio(self.num_arg, base_num)
        r /= gamma_int_ratio(self.den_arg, base_den)
        return r

    def __mul__(self, q) -> "GammaRatioValue":
        return GammaRatioValue(self.coef * Fraction(q), self.num_arg, self.den_arg)

    __rmul__ = __mul__


def combine_gamma_values(values) -> Rat | None:
    """Sum of GammaRatioValues as a coefficient on a common Gamma ratio.

    Returns the summed coefficient relative to the first nonzero term's
    Gamma structure; None for an empty/all-zero sum.
    """
    nonzero = [v for v in values if v.coef != 0]
    if not nonzero:
        return Fraction(0)
    base_num = nonzero[0].num_arg
    base_den = max(v.den_arg for v in nonzero)
    total = Fraction(0)
    for v in nonzero:
        total += v.scaled_coef(base_num, base_den)
    return total


@dataclass(frozen=True)
class ConstClass:
    """A rational multiple of one symbolic constant."""

    symbol: str                       # GAMMA_34 | SQRT_PI | GAMMA_GEGEN
    rational: Rat
    lam: Optional[Rat] = None         # only for GAMMA_GEGEN

    def symbol_value(self, precision_bits: int = 256):
        with mp.workprec(precision_bits + 16):
            if self.symbol == GAMMA_34:
                return mp.gamma(mpf(3) / 4)
            if self.symbol == SQRT_PI:
                return mp.sqrt(mp.pi)
            if self.symbol == GAMMA_GEGEN:
                lam = to_mp(Fraction(self.lam))
                return mp.gamma(lam / 2 + mpf(1) / 4)
        raise ValueError(f"unknown symbol {self.symbol}")

    def symbol_base_arg(self) -> Rat:
        """The Gamma argument whose Gamma value the symbol equals.

        sqrt(pi) = Gamma(1/2), so every symbol is a Gamma at a rational
        argument; exact evaluation telescopes the denominator Gamma
        against this base.
        """
        if self.symbol == GAMMA_34:
            return Fraction(3, 4)
        if self.symbol == SQRT_PI:
            return Fraction(1, 2)
        if self.symbol == GAMMA_GEGEN:
            return Fraction(self.lam) / 2 + Fraction(1, 4)
        raise ValueError(f"unknown symbol {self.symbol}")


@dataclass(frozen=True)
class MellinClosedForm:
    """Transform in factored shape: const x poly(s) x Gamma ratio.

    Numerator Gamma argument is s/2 + gamma_num_offset (offset eps/2),
    denominator argument s/2 + gamma_den_offset.
    """

    family: str                       # "U" | "T" | "gegenbauer" | "beta"
    n: int
    lam: Optional[Rat]
    epsilon: int
    poly: RatPoly
    const: ConstClass
    gamma_num_offset: Rat
    gamma_den_offset: Rat
    beta: Optional[Rat] = None

    def rational_rep(self, s: Rat, shift: Rat = Fraction(0)) -> GammaRatioValue:
        """Value at s + shift as coef x Gamma(num)/Gamma(den), the symbolic
        constant factored out (comparisons must share family/lambda)."""
        sigma = Fraction(s) + Fraction(shift)
        return GammaRatioValue(
            self.const.rational * self.poly(sigma),
            sigma / 2 + self.gamma_num_offset,
            sigma / 2 + self.gamma_den_offset,
        )

    def evaluate(self, s, precision_bits: int = 256):
        """Numeric value at complex s via log-Gamma."""
        with mp.workprec(precision_bits + 16):
            sm = to_mp(s)
            num = sm / 2 + to_mp(self.gamma_num_offset)
            den = sm / 2 + to_mp(self.gamma_den_offset)
            for arg in (num, den):
                if mp.im(arg) == 0 and mp.re(arg) <= 0 and mp.re(arg) == int(mp.re(arg)):
                    raise GammaPoleError(f"Gamma argument {arg} is a non-positive integer")
            val = (
                to_mp(self.const.rational)
                * self.const.symbol_value(precision_bits)
                * _poly_mp(self.poly, sm)
                * mp.exp(mp.loggamma(num) - mp.loggamma(den))
            )
            return +val

    def evaluate_exact(self, s: Rat) -> Optional[Rat]:
        """Exact rational value at rational s when the Gamma content cancels.

        That happens when the numerator Gamma argument is a positive
        integer and the denominator argument sits an integer step above
        the symbolic constant's base argument.  Returns None otherwise.
        """
        s = Fraction(s)
        num = s / 2 + self.gamma_num_offset
        den = s / 2 + self.gamma_den_offset
        base = self.const.symbol_base_arg()
        if num.denominator != 1 or (den - base).denominator != 1:
            return None
        if num <= 0:
            raise GammaPoleError(f"transform pole at s = {s}")
        num_val = pochhammer(1, int(num) - 1)          # Gamma(num) = (num-1)!
        den_ratio = gamma_int_ratio(den, base)         # Gamma(den) = ratio * Gamma(base)
        if den_ratio == 0:
            raise GammaPoleError(f"transform pole at s = {s}")
        return self.const.rational * self.poly(s) * num_val / den_ratio

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        doc = {
            "schema": "1",
            "family": self.family,
            "n": self.n,
            "normalization": "rational-p" if self.family != "T" else "monic",
            "variable": self.poly.var,
            "coeffs_ascending": self.poly.to_str_coeffs(),
        }
        if self.family == "gegenbauer":
            doc["lambda"] = rat_to_str(self.lam)
        if self.family == "beta":
            doc["beta"] = rat_to_str(self.beta)
        if self.family == "T":
            doc["const_rational"] = rat_to_str(self.const.rational)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def poly_from_json(doc: dict) -> RatPoly:
    """Re-parse the polynomial JSON schema back into a RatPoly."""
    return RatPoly([rat_from_str(c) for c in doc["coeffs_ascending"]], doc["variable"])


def _poly_mp(p: RatPoly, x):
    acc = mpf(0) if not isinstance(x, mpc) else mpc(0)
    for c in reversed(p.coeffs):
        acc = acc * x + to_mp(c)
    return acc
