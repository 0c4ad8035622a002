"""Arbitrary-precision numeric kernels: complex log-Gamma, the
double-exponential quadrature oracle for the defining integrals, Aberth
simultaneous root refinement with exact rational-root pre-extraction, and
critical-line verdicts.

mpmath supplies the multiprecision floating arithmetic; the quadrature
scheme and the root iteration are implemented here so their initialization
and stopping rules are fully pinned down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from mpmath import mp, mpc, mpf

from .closedform import GammaPoleError, to_mp
from .exact import RatPoly, Rat

__all__ = [
    "log_gamma",
    "QuadratureError",
    "tanh_sinh",
    "mellin_quadrature",
    "auxiliary_quadrature",
    "ZeroReport",
    "find_roots",
    "critical_line_report",
    "RootFindingError",
]


def log_gamma(z, precision_bits: int = 256):
    """Principal-branch log Gamma(z) at the requested precision.

    Backed by mpmath's loggamma (argument shifting plus a truncated
    Stirling series internally); non-positive integer arguments raise.
    """
    with mp.workprec(precision_bits + 8):
        zm = to_mp(z)
        if mp.im(zm) == 0 and mp.re(zm) <= 0 and mp.re(zm) == mp.floor(mp.re(zm)):
            raise GammaPoleError(f"log_gamma pole at {zm}")
        return +mp.loggamma(zm)


class QuadratureError(ArithmeticError):
    """Node-doubling failed to reach the target agreement."""


def _tanh_sinh_sum(f, half_len, mid, h, n_half, prec):
    """Trapezoid sum over t = k h, |k| <= n_half, under the transform
    x = mid + half_len * tanh((pi/2) sinh t)."""
    pi_half = mp.pi / 2
    total = mpc(0)
    floor_mag = mpf(2) ** (-(prec + 24))
    for k in range(-n_half, n_half + 1):
        t = k * h
        sh = mp.sinh(t)
        ch = mp.cosh(t)
        sech = 1 / mp.cosh(pi_half * sh)
        w = pi_half * ch * sech * sech
        if abs(w) < floor_mag:
            continue
        x = mid + half_len * mp.tanh(pi_half * sh)
        if x <= mid - half_len or x >= mid + half_len:
            continue
        total += w * f(x)
    return total * h * half_len


def tanh_sinh(
    f: Callable,
    a,
    b,
    precision_bits: int = 256,
    target_rel=None,
    initial_nodes: int = 400,
    max_doublings: int = 6,
):
    """Double-exponential quadrature of f over the finite interval (a, b).

    Node counts double each level until two successive estimates agree to
    the target relative error (default 10^-min(precision_bits/4, 12)).
    Endpoint power-law singularities are handled by the transform; the
    endpoints themselves are never evaluated.  Raises QuadratureError with
    the last estimate attached when agreement is not reached.
    """
    prec = precision_bits
    with mp.workprec(prec + 24):
        am, bm = to_mp(a), to_mp(b)
        if target_rel is None:
            target_rel = mpf(10) ** (-min(prec * 0.25, 12))
        else:
            target_rel = to_mp(target_rel)
        half_len = (bm - am) / 2
        mid = (am + bm) / 2
        # clip the t-line where the weight underflows the working precision
        t_max = mp.asinh(mp.log(mpf(2) ** (prec + 32)) * 2 / mp.pi)
        n_half = max(initial_nodes // 2, 8)
        h = t_max / n_half
        prev = None
        for level in range(max_doublings + 1):
            est = _tanh_sinh_sum(f, half_len, mid, h, n_half, prec)
            if prev is not None:
                scale = max(abs(est), mpf(10) ** -30)
                if abs(est - prev) <= target_rel * scale:
                    if isinstance(est, mpc) and est.imag == 0:
                        return +est.real
                    return +est
            prev = est
            n_half *= 2
            h = h / 2
        raise QuadratureError(
            f"tanh-sinh did not converge to {mp.nstr(target_rel, 3)} "
            f"after {max_doublings} doublings; last estimate {mp.nstr(prev, 12)}"
        )


def _poly_mp_eval(p: RatPoly, x):
    acc = mpc(0) if isinstance(x, mpc) else mpf(0)
    for c in reversed(p.coeffs):
        acc = acc * x + to_mp(c)
    return acc


def mellin_quadrature(
    family: str,
    n: int,
    lam: Optional[Rat],
    s,
    precision_bits: int = 256,
    target_rel=None,
):
    """Defining integral in theta form,
    int_0^{pi/2} cos^{s-1}(theta) poly(cos theta) sin^w(theta) dtheta,
    with w = 1/2 for the U family (weight (1-x^2)^{-1/4}), w = 2 for the
    T family (weight (1-x^2)^{1/2}), and w = lambda - 1/2 for the
    Gegenbauer family.  Both endpoint singularities are power-law and are
    absorbed by the double-exponential transform.
    """
    from .cheb_mellin import chebyshev_poly
    from .gegen_mellin import gegenbauer_poly

    if family == "U":
        poly, w_exp = chebyshev_poly("U", n), mpf(1) / 2
    elif family == "T":
        poly, w_exp = chebyshev_poly("T", n), mpf(2)
    elif family in ("gegenbauer", "beta"):
        if lam is None:
            raise ValueError("lambda required for the Gegenbauer family")
        lam = Fraction(lam)
        if lam <= Fraction(-1, 2):
            raise ValueError("lambda must exceed -1/2")
        poly, w_exp = gegenbauer_poly(n, lam), to_mp(lam) - mpf(1) / 2
    else:
        raise ValueError("family must be 'U', 'T', or 'gegenbauer'")
    with mp.workprec(precision_bits + 24):
        sm = to_mp(s)
        re_s = mp.re(sm)
        if (n % 2 == 0 and re_s <= 0) or (n % 2 == 1 and re_s <= -1):
            raise ValueError("Re s out of the integral's domain")

        def integrand(theta):
            c = mp.cos(theta)
            si = mp.sin(theta)
            return mp.exp((sm - 1) * mp.log(c)) * _poly_mp_eval(poly, c) * si**w_exp

        return tanh_sinh(
            integrand, mpf(0), mp.pi / 2, precision_bits, target_rel=target_rel
        )


def auxiliary_quadrature(kind: str, params: dict, precision_bits: int = 256):
    """Quadrature side of the auxiliary integral identities.

    kind "eq23":  int_0^1 (1-x)^(-beta) x^(-beta)
                   2F1((1-n)/2, -n/2; 1-(n+s)/2; x) dx, params beta, n, s.
    kind "eq312": int_0^1 x^r (1-x)^q U_n(x) dx, params r, q, n.
    kind "eq51":  the Laplace-type representation of C_n^lambda(x) for
                   0 < x < 1 (full right side including its prefactor),
                   params n, lam, x.
    """
    from .cheb_mellin import chebyshev_poly

    with mp.workprec(precision_bits + 24):
        if kind == "eq23":
            beta = Fraction(params["beta"])
            n = params["n"]
            s = Fraction(params["s"])
            if beta >= 1:
                raise ValueError("beta must be below 1")
            inner = _terminating_2f1_poly(n, s)
            bm = to_mp(beta)

            def f(x):
                return (1 - x) ** (-bm) * x ** (-bm) * _poly_mp_eval(inner, x)

            return tanh_sinh(f, mpf(0), mpf(1), precision_bits)
        if kind == "eq312":
            r, q = to_mp(params["r"]), to_mp(params["q"])
            u = chebyshev_poly("U", params["n"])

            def f(x):
                return x**r * (1 - x) ** q * _poly_mp_eval(u, x)

            return tanh_sinh(f, mpf(0), mpf(1), precision_bits)
        if kind == "eq51":
            from .exact import pochhammer
            from .gegen_mellin import gegenbauer_poly  # noqa: F401  (parity with callers)

            n = params["n"]
            lam = Fraction(params["lam"])
            x = to_mp(Fraction(params["x"]))
            if lam <= 0:
                raise ValueError("lambda must be positive for this representation")
            root = mp.sqrt(mpc(x * x - 1))

            def f(theta):
                return (x + root * mp.cos(theta)) ** n * mp.sin(theta) ** (
                    2 * to_mp(lam) - 1
                )

            integral = tanh_sinh(f, mpf(0), mp.pi, precision_bits)
            pref = (
                to_mp(pochhammer(2 * lam, n) / pochhammer(1, n))
                / mp.sqrt(mp.pi)
                * mp.gamma(to_mp(lam) + mpf(1) / 2)
                / mp.gamma(to_mp(lam))
            )
            value = pref * integral
            # the integral is real for real x; drop the cancelled imaginary dust
            return +mp.re(value) if abs(mp.im(value)) < mpf(2) ** (-precision_bits // 2) else +value
        raise ValueError(f"unknown auxiliary integral {kind}")


def _terminating_2f1_poly(n: int, s: Rat) -> RatPoly:
    """2F1((1-n)/2, -n/2; 1-(n+s)/2; x) as an exact polynomial in x."""
    from .exact import pochhammer

    a, b, c = Fraction(1 - n, 2), Fraction(-n, 2), 1 - (Fraction(n) + Fraction(s)) / 2
    coeffs = []
    term = Fraction(1)
    for k in range(n // 2 + 1):
        coeffs.append(term)
        term *= (a + k) * (b + k) / ((c + k) * (k + 1))
    return RatPoly(coeffs, "x")


# ---------------------------------------------------------------------------
# Root localization
# ---------------------------------------------------------------------------

class RootFindingError(ArithmeticError):
    """Aberth refinement failed to converge; partial results attached."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class ZeroReport:
    """Located roots of a rational polynomial with certification data."""

    degree: int
    roots: tuple                      # all roots as mpc, sorted by (Im, Re)
    real_roots: tuple                 # exact rational roots as Fractions
    residual_bound: object            # mpf
    max_re_deviation: object          # mpf, max |Re r - 1/2|
    conjugate_pairing_ok: bool
    min_gap: object                   # mpf, min pairwise distance (inf if < 2 roots)
    residuals: tuple = ()


def _rational_roots(p: RatPoly, limit: int = 1 << 62) -> tuple[list[Rat], RatPoly]:
    """Extract exact rational roots: the symmetry center 1/2 first, then a
    divisor scan of the integerized extreme coefficients when they are
    small enough to factor by trial division."""
    found: list[Rat] = []
    half = Fraction(1, 2)
    while p.degree >= 1 and p(half) == 0:
        found.append(half)
        p = p.exact_div(RatPoly([-half, 1], p.var))
    if p.degree >= 1:
        from math import lcm

        den = lcm(*[c.denominator for c in p.coeffs])
        ints = [int(c * den) for c in p.coeffs]
        lead, const = ints[-1], ints[0]
        while const == 0 and p.degree >= 1:
            found.append(Fraction(0))
            p = p.exact_div(RatPoly([0, 1], p.var))
            den = lcm(*[c.denominator for c in p.coeffs])
            ints = [int(c * den) for c in p.coeffs]
            lead, const = ints[-1], ints[0]
        if p.degree >= 1 and abs(const) <= limit and abs(lead) <= limit:
            for num_d in _divisors(abs(const)):
                for den_d in _divisors(abs(lead)):
                    for cand in (Fraction(num_d, den_d), Fraction(-num_d, den_d)):
                        while p.degree >= 1 and p(cand) == 0:
                            found.append(cand)
                            p = p.exact_div(RatPoly([-cand, 1], p.var))
                    if p.degree == 0:
                        break
                if p.degree == 0:
                    break
    return found, p


def _divisors(n: int, cap: int = 20000) -> list[int]:
    if n == 0:
        return [1]
    out = set()
    d = 1
    while d * d <= n and len(out) < cap:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _init_radius(coeffs_mp) -> object:
    """1 + max_k |c_{d-k}/c_d|^(1/k): the scale-correct coefficient-ratio
    bound, within a factor 2 of the outermost root magnitude."""
    d = len(coeffs_mp) - 1
    lead = coeffs_mp[-1]
    return 1 + max(
        abs(coeffs_mp[d - k] / lead) ** (mpf(1) / k) for k in range(1, d + 1)
    )


def _aberth(coeffs_mp, precision_bits: int, max_iter: int = 250):
    """Simultaneous Aberth-Ehrlich iteration at the caller's working
    precision.

    Initialization on a circle centered at 1/2 (the reflection symmetry
    center of the polynomial families certified here) with the
    coefficient-ratio radius, angles de-phased to avoid symmetric
    stalls.  Stops when every correction is below 2^-(precision_bits+8)
    relative to its root's magnitude.
    """
    d = len(coeffs_mp) - 1
    radius = _init_radius(coeffs_mp)
    center = mpc(mpf(1) / 2, 0)
    zs = [
        center + radius * mp.exp(mpc(0, 1) * (2 * mp.pi * k / d + mpf(2) / 5))
        for k in range(d)
    ]
    dcoeffs = [coeffs_mp[i] * i for i in range(1, d + 1)]

    def horner(cs, x):
        acc = mpc(0)
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    tol = mpf(2) ** (-(precision_bits + 8))
    for _ in range(max_iter):
        moved_rel = mpf(0)
        for i in range(d):
            z = zs[i]
            pv = horner(coeffs_mp, z)
            dv = horner(dcoeffs, z)
            if pv == 0:
                continue
            if dv == 0:
                zs[i] = z + mpf(1) / 1024
                moved_rel = mpf(1)
                continue
            ratio = pv / dv
            acc = mpc(0)
            for j in range(d):
                if j != i:
                    acc += 1 / (z - zs[j])
            denom = 1 - ratio * acc
            step = ratio if denom == 0 else ratio / denom
            zs[i] = z - step
            moved_rel = max(moved_rel, abs(step) / max(abs(zs[i]), mpf(1)))
        if moved_rel < tol:
            return zs
    raise RootFindingError("Aberth iteration did not converge", partial=zs)


def _newton_polish(coeffs_mp, dcoeffs, roots, precision_bits: int, steps: int = 3):
    with mp.workprec(precision_bits + 64):
        out = []
        for z in roots:
            for _ in range(steps):
                pv = mpc(0)
                for c in reversed(coeffs_mp):
                    pv = pv * z + c
                dv = mpc(0)
                for c in reversed(dcoeffs):
                    dv = dv * z + c
                if dv == 0:
                    break
                z = z - pv / dv
            out.append(z)
        return out


def find_roots(p: RatPoly, precision_bits: int = 256) -> ZeroReport:
    """All complex roots of p with exact rational roots extracted first.

    Rational roots (including the symmetry center 1/2 and the integer
    roots of the T family) are divided out exactly; the rest go through
    Aberth refinement at working precision with a residual certificate
    |p(root)| <= 2^-(precision_bits-16) x max |coefficient|.
    """
    if p.degree < 1:
        return ZeroReport(
            degree=p.degree,
            roots=(),
            real_roots=(),
            residual_bound=mpf(0),
            max_re_deviation=mpf(0),
            conjugate_pairing_ok=True,
            min_gap=mp.inf,
        )
    exact, rest = _rational_roots(p)
    approx = []
    if rest.degree == 1:
        exact = exact + [-rest.coeffs[0] / rest.coeffs[1]]
        rest = RatPoly([1], p.var)
    # evaluating p near roots of magnitude R costs ~ d log2(R) bits of the
    # working precision, so both the iteration and the residual
    # certificate run with that many extra bits
    with mp.workprec(precision_bits + 32):
        radius_est = (
            _init_radius([to_mp(c) for c in rest.coeffs]) if rest.degree >= 1 else mpf(1)
        )
    extra = int(p.degree * mp.log(max(radius_est, mpf(2)), 2)) + 48
    with mp.workprec(precision_bits + 32 + extra):
        if rest.degree >= 1:
            coeffs_mp = [to_mp(c) for c in rest.coeffs]
            approx = _aberth(coeffs_mp, precision_bits + extra // 2)
            drest = [coeffs_mp[i] * i for i in range(1, len(coeffs_mp))]
            approx = _newton_polish(coeffs_mp, drest, approx, precision_bits + extra)
        coeff_scale = max(abs(to_mp(c)) for c in p.coeffs)
        bound = mpf(2) ** (-(precision_bits - 16)) * coeff_scale
        roots = [mpc(to_mp(r), 0) for r in exact] + [mpc(z) for z in approx]
        residuals = tuple(abs(_poly_mp_eval(p, z)) for z in roots)
        bad = [r for r in residuals if r > bound]
        if bad:
            raise RootFindingError(
                f"residuals exceed the certificate bound {mp.nstr(bound, 5)}",
                partial=roots,
            )
        roots.sort(key=lambda z: (mp.im(z), mp.re(z)))
        max_dev = max(abs(mp.re(z) - mpf(1) / 2) for z in roots)
        pair_tol = mpf(2) ** (-(precision_bits - 24))
        pairing = _conjugate_pairing_ok(roots, pair_tol)
        if len(roots) >= 2:
            min_gap = min(
                abs(roots[i] - roots[j])
                for i in range(len(roots))
                for j in range(i + 1, len(roots))
            )
        else:
            min_gap = mp.inf
        return ZeroReport(
            degree=p.degree,
            roots=tuple(roots),
            real_roots=tuple(sorted(exact)),
            residual_bound=+bound,
            max_re_deviation=+max_dev,
            conjugate_pairing_ok=pairing,
            min_gap=+min_gap,
            residuals=residuals,
        )


def _conjugate_pairing_ok(roots, tol) -> bool:
    left = list(roots)
    while left:
        z = left.pop()
        if abs(mp.im(z)) <= tol:
            continue
        match = None
        for i, w in enumerate(left):
            if abs(mp.conj(z) - w) <= tol * max(1, abs(z)):
                match = i
                break
        if match is None:
            return False
        left.pop(match)
    return True


@dataclass(frozen=True)
class CriticalLineVerdict:
    verdict: str                      # "critical" | "real-line" | "mixed"
    offending: tuple = ()


def critical_line_report(zr: ZeroReport, tol) -> CriticalLineVerdict:
    """Classify a zero report: "critical" when every root sits on
    Re s = 1/2 (within tol, conjugate pairing verified), "real-line" when
    every root is real within tol, else "mixed" with offenders listed.
    Degree < 1 is vacuously critical."""
    tol = to_mp(tol)
    if zr.degree < 1 or not zr.roots:
        return CriticalLineVerdict("critical")
    on_line = zr.max_re_deviation <= tol and zr.conjugate_pairing_ok
    if on_line:
        return CriticalLineVerdict("critical")
    real = all(abs(mp.im(z)) <= tol for z in zr.roots)
    if real:
        return CriticalLineVerdict("real-line")
    offenders = tuple(
        z
        for z in zr.roots
        if abs(mp.re(z) - mpf(1) / 2) > tol and abs(mp.im(z)) > tol
    )
    return CriticalLineVerdict("mixed", offenders)
