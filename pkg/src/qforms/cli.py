"""Command-line front end.

Subcommands: expand, verify, count, formula, factor.  Exit status is 0 on
success, 1 when a MUST_PASS identity fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import arith, closedform, registry, repcount
from .expr import ExprError, eval_expr, parse_expr
from .series import SeriesError, default_order


def _rat(x: Fraction):
    return x.numerator if x.denominator == 1 else str(x)


def _int_list(text: str, size: int, flag: str):
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise SystemExit(_usage(f"{flag} expects {size} comma-separated integers"))
    if len(vals) != size:
        raise SystemExit(_usage(f"{flag} expects {size} comma-separated integers"))
    return vals


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def cmd_expand(args) -> int:
    ast = parse_expr(args.expr)
    s = eval_expr(ast, args.order)
    if args.format == "json":
        print(json.dumps({"expr": args.expr, "order": args.order, "min_exp": s.min_exp,
                          "coefficients": [_rat(c) for c in s.coefficients()]}))
    else:
        for k, c in zip(range(s.min_exp, s.order + 1), s.coefficients()):
            print(f"{k} {_rat(c)}")
    return 0


def cmd_verify(args) -> int:
    if args.all == bool(args.id):
        return _usage("verify needs exactly one of --id or --all")
    if args.id:
        try:
            reports = [registry.verify(args.id, args.order)]
        except KeyError as e:
            return _usage(e.args[0])
    else:
        reports = registry.verify_all(args.order, parallel=args.parallel)
    for r in reports:
        line = f"{r.status:17s} {r.id}"
        if r.first_mismatch is not None:
            line += f"  first mismatch at q^{r.first_mismatch}: {r.lhs_coeff} vs {r.rhs_coeff}"
        print(line)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(registry.report_json(reports) + "\n")
    failed = registry.must_pass_failures(reports)
    print(f"{len(reports)} verified, {len(failed)} MUST_PASS failure(s)")
    return 1 if failed else 0


def cmd_count(args) -> int:
    if bool(args.form) == bool(args.quat):
        return _usage("count needs exactly one of --form or --quat")
    if args.form:
        s = repcount.bqf_theta(repcount.BinaryForm(*_int_list(args.form, 3, "--form")), args.upto)
    else:
        s = repcount.diag4_theta(_int_list(args.quat, 4, "--quat"), args.upto)
    for n in range(args.upto + 1):
        print(f"{n} {s.coeff(n).numerator}")
    return 0


def cmd_formula(args) -> int:
    if args.name not in closedform.FORMULAS:
        return _usage(f"unknown formula {args.name!r}; choose from {', '.join(sorted(closedform.FORMULAS))}")
    res = closedform.evaluate(args.name, args.n)
    print(res.value)
    return 0


def cmd_factor(args) -> int:
    if args.n < 1:
        return _usage("factor needs a positive integer")
    f = arith.factorize(args.n)
    parts = [str(p) if e == 1 else f"{p}^{e}" for p, e in f.factors]
    print(f"{args.n} = {' * '.join(parts) if parts else '1'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qforms", description="q-series identities and representation counts")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand an expression to a given order")
    p.add_argument("--expr", required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="verify catalog identities")
    p.add_argument("--id")
    p.add_argument("--all", action="store_true")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="representation counts by enumeration")
    p.add_argument("--form", metavar="a,b,c")
    p.add_argument("--quat", metavar="d1,d2,d3,d4")
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("formula", help="evaluate a closed-form coefficient formula")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("factor", help="prime factorization")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_factor)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "order", None) is None and args.command in ("expand", "verify"):
        args.order = default_order() if args.command == "expand" else _env_order()
    if getattr(args, "order", None) is not None and args.order < 0:
        return _usage("--order must be nonnegative")
    try:
        return args.func(args)
    except (ExprError, SeriesError, ValueError) as e:
        return _usage(str(e))


def _env_order():
    """QFORMS_ORDER if set, else None so each entry uses its own default."""
    return default_order() if os.environ.get("QFORMS_ORDER") else None


if __name__ == "__main__":
    sys.exit(main())
