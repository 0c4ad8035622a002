"""Command-line surface: poly, zeros, eval, verify, bench.

Exit codes: 0 success, 1 verification/verdict failure, 2 usage error.
All output is deterministic for a fixed --seed and --precision.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from mpmath import mp, mpc, mpf

from . import cheb_mellin as cm
from . import gegen_mellin as gm
from . import numerics
from .closedform import GammaPoleError, MellinClosedForm, to_mp
from .exact import rat_from_str, rat_to_str
from .suites import SUITES, SuiteOptions, run_suite

FAMILIES = ("u", "t", "gegenbauer", "beta")
EXPECTED_VERDICT = {"u": "critical", "t": "real-line", "gegenbauer": "critical", "beta": "critical"}


class UsageError(Exception):
    pass


def parse_complex(text: str) -> tuple[Fraction, Fraction]:
    """Parse "a+bi" with rational or decimal parts ("3/2+1/4i", "2", "0.3-2i")."""
    s = text.strip().replace(" ", "")
    if not s:
        raise UsageError("empty complex literal")
    re_part, im_part = s, None
    if s.endswith(("i", "I", "j")):
        body = s[:-1]
        idx = max(body.rfind("+", 1), body.rfind("-", 1))
        if idx > 0:
            re_part, im_part = body[:idx], body[idx:]
        else:
            re_part, im_part = "0", body or "+1"
    try:
        re_val = Fraction(re_part) if re_part not in ("", "+", "-") else Fraction(0)
        if im_part is None:
            im_val = Fraction(0)
        elif im_part in ("+", "-"):
            im_val = Fraction(im_part + "1")
        else:
            im_val = Fraction(im_part)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse complex literal {text!r}: {exc}") from None
    return re_val, im_val


def closed_form_for(family: str, n: int, lam=None, beta=None) -> MellinClosedForm:
    if family == "u":
        return cm.mellin_U_closed(n)
    if family == "t":
        return cm.mellin_T_closed(n)
    if family == "gegenbauer":
        if lam is None:
            raise UsageError("--lambda is required for the gegenbauer family")
        return gm.mellin_G_closed(n, lam)
    if family == "beta":
        if beta is None:
            raise UsageError("--beta is required for the beta family")
        return gm.mellin_beta_closed(n, beta)
    raise UsageError(f"unknown family {family!r}")


def _validate_family_params(args) -> tuple[Optional[Fraction], Optional[Fraction]]:
    try:
        lam = rat_from_str(args.lam) if getattr(args, "lam", None) else None
        beta = rat_from_str(args.beta) if getattr(args, "beta", None) else None
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational parameter: {exc}") from None
    if lam is not None and args.family != "gegenbauer":
        raise UsageError("--lambda only applies to the gegenbauer family")
    if beta is not None and args.family != "beta":
        raise UsageError("--beta only applies to the beta family")
    return lam, beta


def _digits(precision_bits: int) -> int:
    return max(8, int(precision_bits / 3.32))


def _add_shared(p: argparse.ArgumentParser, *, with_n=True):
    p.add_argument("--family", choices=FAMILIES, required=True)
    if with_n:
        p.add_argument("--n", type=int)
        p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--lambda", dest="lam", help="rational lambda, e.g. 3/2")
    p.add_argument("--beta", dest="beta", help="rational beta, e.g. -1")
    p.add_argument("--precision", type=int, default=256, help="working precision in bits")
    p.add_argument("--tol", default="1e-20", help="zero-verdict tolerance")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")


def cmd_poly(args) -> int:
    lam, beta = _validate_family_params(args)
    if args.n is None or args.n < 0:
        raise UsageError("--n must be a natural number")
    form = closed_form_for(args.family, args.n, lam, beta)
    doc = form.to_json_dict()
    if args.format == "json":
        print(json.dumps(doc))
    elif args.format == "csv":
        print(",".join(doc["coeffs_ascending"]))
    else:
        print(f"{doc['family']} n={doc['n']} coeffs {' '.join(doc['coeffs_ascending'])}")
    return 0


def cmd_zeros(args) -> int:
    lam, beta = _validate_family_params(args)
    if args.n is None and args.max_n is None:
        raise UsageError("give --n or --max-n")
    ns = [args.n] if args.n is not None else list(range(args.max_n + 1))
    digits = _digits(args.precision)
    tol = mpf(args.tol)
    print("n,family,lambda,root_index,re,im,residual")
    all_ok = True
    for n in ns:
        form = closed_form_for(args.family, n, lam, beta)
        report = numerics.find_roots(form.poly, args.precision)
        verdict = numerics.critical_line_report(report, tol)
        lam_field = rat_to_str(lam) if lam is not None else (
            rat_to_str(Fraction(3, 2) - 2 * beta) if beta is not None else ""
        )
        for idx, root in enumerate(report.roots):
            res = report.residuals[idx] if report.residuals else mpf(0)
            print(
                f"{n},{args.family},{lam_field},{idx},"
                f"{mp.nstr(mp.re(root), digits)},{mp.nstr(mp.im(root), digits)},"
                f"{mp.nstr(res, 8)}"
            )
        print(
            f"family={args.family} n={n} verdict={verdict.verdict} "
            f"max_re_dev={mp.nstr(report.max_re_deviation, 8)}",
            file=sys.stderr,
        )
        vacuous = form.poly.degree < 1
        if not (verdict.verdict == EXPECTED_VERDICT[args.family] or (vacuous and verdict.verdict == "critical")):
            all_ok = False
    return 0 if all_ok else 1


def cmd_eval(args) -> int:
    lam, beta = _validate_family_params(args)
    if args.n is None or args.s is None:
        raise UsageError("--n and --s are required")
    re_s, im_s = parse_complex(args.s)
    form = closed_form_for(args.family, args.n, lam, beta)
    digits = _digits(args.precision)
    with mp.workprec(args.precision + 16):
        s_val = mpc(to_mp(re_s), to_mp(im_s)) if im_s != 0 else to_mp(re_s)
        try:
            value = form.evaluate(s_val, args.precision)
        except GammaPoleError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        doc = {
            "schema": "1",
            "family": args.family,
            "n": args.n,
            "s": args.s,
            "value": mp.nstr(value, digits),
        }
        if args.oracle:
            fam = args.family.upper() if args.family in ("u", "t") else args.family
            lam_eff = lam if lam is not None else (
                Fraction(3, 2) - 2 * beta if beta is not None else None
            )
            re_dom = mp.re(s_val)
            if (args.n % 2 == 0 and re_dom <= 0) or (args.n % 2 == 1 and re_dom <= -1):
                print("error: s outside the integral's domain for the oracle", file=sys.stderr)
                return 1
            oracle = numerics.mellin_quadrature(fam, args.n, lam_eff, s_val, args.precision)
            diff = abs(oracle - value) / max(abs(value), mpf(1))
            doc["oracle"] = mp.nstr(oracle, digits)
            doc["rel_diff"] = mp.nstr(diff, 5)
        if args.format == "json":
            print(json.dumps(doc))
        else:
            line = doc["value"]
            if args.oracle:
                line += f"  oracle {doc['oracle']}  rel_diff {doc['rel_diff']}"
            print(line)
    return 0


def cmd_verify(args) -> int:
    lam_grid = None
    if args.lambda_grid:
        lam_grid = tuple(rat_from_str(v) for v in args.lambda_grid.split(","))
    opts = SuiteOptions(
        max_n=args.max_n, lambda_grid=lam_grid, seed=args.seed, precision_bits=args.precision
    )
    try:
        results = run_suite(args.suite, opts)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    failures = 0
    for case in results:
        print(case.to_json())
        if case.status != "pass":
            failures += 1
    if args.max_n == 0:
        print("warning: --max-n 0 collapses most grids; vacuous passes", file=sys.stderr)
    print(
        f"suite={args.suite} cases={len(results)} failures={failures}",
        file=sys.stderr,
    )
    return 0 if failures == 0 else 1


def cmd_bench(args) -> int:
    ns = [n for n in (8, 16, 32) if args.max_n is None or n <= args.max_n]
    s = Fraction(5, 2)
    prec = args.precision
    print("family,n,method,precision_bits,wall_time")
    for n in ns:
        cm.p_poly_U.cache_clear()
        cm._cleared_3f2_poly.cache_clear()
        t0 = time.perf_counter()
        recursion_value = cm.mellin_U_closed(n).evaluate(s, prec)
        t_rec = time.perf_counter() - t0
        t0 = time.perf_counter()
        hyper_value = cm.lemma6_eval(n, s, prec)
        t_hyp = time.perf_counter() - t0
        t0 = time.perf_counter()
        numerics.mellin_quadrature("U", n, None, s, prec)
        t_quad = time.perf_counter() - t0
        with mp.workprec(prec):
            agree = abs(recursion_value - hyper_value) / abs(recursion_value)
            if agree > mpf(2) ** (-(prec - 24)):
                print(f"error: route disagreement at n={n}: {mp.nstr(agree, 5)}", file=sys.stderr)
                return 1
        print(f"u,{n},recursion,{prec},{t_rec:.6f}")
        print(f"u,{n},hypergeometric,{prec},{t_hyp:.6f}")
        print(f"u,{n},quadrature,{prec},{t_quad:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="chebmellin",
        description="Exact polynomial factors of Chebyshev/Gegenbauer weighted transforms, "
        "zero certification, and identity verification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="emit a polynomial factor as JSON")
    _add_shared(p)
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("zeros", help="locate and certify zeros")
    _add_shared(p)
    p.set_defaults(fn=cmd_zeros)

    p = sub.add_parser("eval", help="evaluate a transform at complex s")
    _add_shared(p)
    p.add_argument("--s", required=True, help='complex s, e.g. "2" or "3/2+1/4i"')
    p.add_argument("--oracle", action="store_true", help="also run the quadrature oracle")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=tuple(SUITES) + ("all",))
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--lambda-grid", dest="lambda_grid", help="comma-separated rationals")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--precision", type=int, default=256)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench", help="time the evaluation strategies")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--precision", type=int, default=256)
    p.set_defaults(fn=cmd_bench)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
