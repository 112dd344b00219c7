"""Command-line front end: ``rm3 <command> [options]``.

Exit codes: 0 success, 1 verification mismatch, 2 malformed input,
3 degenerate parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import family, geometry
from .curves import default_quartic, load_curve
from .errors import InputError, RM3Error
from .exact import format_poly, parse_rational
from .finitefield import is_prime
from .rmfield import rm_factor
from .verify import verify_identities, verify_table
from .zeta import ZetaNumerator, count_points, count_points_naive, default_threads, zeta_numerator

SCHEMA = 1


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError, InputError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _prime(text):
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _curve(args):
    return load_curve(args.curve) if args.curve else default_quartic()


def _emit(args, text):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _show_value(v):
    """A raw extension-field element as a polynomial in the generator g."""
    if not isinstance(v, tuple):
        return str(v)
    parts = [f"{c}" if i == 0 else (f"{c}*g" if i == 1 else f"{c}*g^{i}")
             for i, c in enumerate(v) if c]
    return " + ".join(parts) or "0"


def _json(obj):
    return json.dumps({"schema": SCHEMA, **obj}, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# commands


def cmd_family(args):
    s = None if args.symbolic else args.s
    t = None if args.symbolic else args.t
    if args.action == "hyper":
        F = family.build_hyperelliptic(s, t)
        if s is not None and t is not None:
            F = F.primitive()
        _emit(args, format_poly(F))
        return 0
    curve = family.build_curve(s, t, certify=not args.no_certify)
    lines = [format_poly(curve.defining)]
    if curve.genus_certificate is not None:
        lines.insert(0, f"# {curve.genus_certificate} (certified mod "
                        f"{curve.irreducibility_prime})")
    _emit(args, "\n".join(lines))
    return 0


def cmd_geom(args):
    if args.action == "ramify":
        profiles = geometry.u_branch_profiles(args.t, args.p)
        ok = all(pr.multiplicities == (2, 2, 2, 1) for pr in profiles)
        total = sum(pr.ramification for pr in profiles)
        lines = [f"value {_show_value(pr.branch_value)}: {pr}" for pr in profiles]
        lines.append(f"total ramification {total}; "
                     f"{'matches' if ok and total == 12 else 'does not match'} 2,2,2,1 x 4")
        _emit(args, "\n".join(lines))
        return 0 if ok and total == 12 else 1
    curve = _curve(args)
    smooth = geometry.quartic_smooth_mod_p(curve, args.p)
    _emit(args, f"p={args.p}: {'smooth' if smooth else 'singular'}")
    return 0


def cmd_count(args):
    curve = _curve(args)
    if args.naive:
        n = count_points_naive(curve, args.p, args.nu)
    else:
        n = count_points(curve, args.p, args.nu, threads=args.threads)
    _emit(args, str(n))
    return 0


def cmd_zeta(args):
    curve = _curve(args)
    counts, h = zeta_numerator(curve, args.p, threads=args.threads)
    _emit(args, _json({"p": args.p, "counts": counts, "numerator": h.coefficients(),
                       "trace": h.trace}))
    return 0


def _read_numerator(args):
    if args.from_json:
        try:
            with open(args.from_json) as fh:
                data = json.load(fh)
            coeffs = data["numerator"]
            return ZetaNumerator(int(data["p"]), int(coeffs[1]), int(coeffs[2]), int(coeffs[3]))
        except (OSError, ValueError, KeyError, IndexError, TypeError) as exc:
            raise InputError(f"cannot read numerator from {args.from_json}: {exc}") from None
    if args.p is None or args.h is None:
        raise InputError("give --p and --h a,b,c or --from-json FILE")
    try:
        a, b, c = (int(v) for v in args.h.split(","))
    except ValueError:
        raise InputError("--h expects three comma-separated integers a,b,c") from None
    return ZetaNumerator(args.p, a, b, c)


def cmd_rm_factor(args):
    h = _read_numerator(args)
    factor = rm_factor(h)
    alpha = factor.alpha
    _emit(args, _json({"p": h.p, "alpha": list(alpha.coords()), "alpha_text": str(alpha),
                       "conjugates": [list(c.coords()) for c in alpha.conjugates()],
                       "factor": str(factor)}))
    return 0


def cmd_verify_table(args):
    report = verify_table(args.pmax, _curve(args), threads=args.threads)
    if args.json:
        rows = [{"name": r.name, "status": r.status, "detail": r.detail,
                 "seconds": round(r.seconds, 3), **r.data} for r in report.rows]
        _emit(args, _json({"rows": rows, "ok": report.ok}))
    else:
        _emit(args, report.text())
    return report.exit_code()


def cmd_verify_identities(args):
    w = None
    if args.perturb_w:
        from .exact import MultiPoly
        base = family.w_poly()
        w = base + MultiPoly.var("x", base.variables) ** 3
    report = verify_identities(args.t or None, w_override=w)
    if args.json:
        rows = [{"name": r.name, "status": r.status, "detail": r.detail,
                 "seconds": round(r.seconds, 3)} for r in report.rows]
        _emit(args, _json({"rows": rows, "ok": report.ok}))
    else:
        _emit(args, report.text())
    return report.exit_code()


# ---------------------------------------------------------------------------
# parser


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rm3", description="Genus-3 curves with real multiplication by Q(zeta_7)^+.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write output to this file instead of stdout")
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker threads for point counting (default: available CPUs)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="print family members")
    p.add_argument("action", choices=["show", "hyper"])
    p.add_argument("--s", type=_rational, default=Fraction(0))
    p.add_argument("--t", type=_rational, default=Fraction(-2))
    p.add_argument("--symbolic", action="store_true", help="keep s and t as parameters")
    p.add_argument("--no-certify", action="store_true", help="skip the genus certificate")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("geom", parents=[common], help="ramification and smoothness")
    p.add_argument("action", choices=["ramify", "smooth"])
    p.add_argument("--t", type=_rational, default=Fraction(-2))
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--curve", help="curve file (default: shipped quartic)")
    p.set_defaults(func=cmd_geom)

    p = sub.add_parser("count", parents=[common], help="count points over GF(p^nu)")
    p.add_argument("--curve")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--nu", type=_positive, default=1)
    p.add_argument("--naive", action="store_true", help="use the exhaustive oracle")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("zeta", parents=[common], help="zeta numerator as JSON")
    p.add_argument("--curve")
    p.add_argument("--p", type=_prime, required=True)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("rm-factor", parents=[common], help="factor a numerator over O_K")
    p.add_argument("--p", type=_prime)
    p.add_argument("--h", help="a,b,c of 1 + a x + b x^2 + c x^3 + ...")
    p.add_argument("--from-json", help="output file of the zeta command")
    p.set_defaults(func=cmd_rm_factor)

    p = sub.add_parser("verify-table", parents=[common], help="reproduce the factor table")
    p.add_argument("--pmax", type=int, default=89)
    p.add_argument("--curve")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("verify-identities", parents=[common], help="symbolic identity suite")
    p.add_argument("--t", type=_rational, action="append",
                   help="parameter value for the t-dependent checks (repeatable)")
    p.add_argument("--perturb-w", action="store_true",
                   help="test mode: run with a deliberately wrong numerator of u_t")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_identities)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.threads is None:
        args.threads = default_threads()
    try:
        return args.func(args)
    except RM3Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
