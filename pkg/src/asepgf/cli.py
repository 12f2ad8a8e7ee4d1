"""Command-line entry point: ``asepgf {gf,verify,markov,enumerate}``.

Exit codes: 0 success, 1 verification or solve failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import closed_form as cf
from . import oracle
from .algebra import AlgebraError
from .asep import Lambda, SingularChain, stationary, transition_matrix
from .serialize import rational_str, to_csv, to_json_obj
from .verify import THEOREMS

GF_KINDS = ("p", "kernel", "return", "return-recursive", "crossing", "two-type")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}")


def _need(value, name):
    if value is None:
        raise UsageError(f"--{name} is required")
    return value


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_series(series, kind: str, args) -> None:
    if args.format == "csv":
        _emit(to_csv(series), args.output)
    else:
        _emit(json.dumps(to_json_obj(series, kind), indent=2) + "\n", args.output)


def run_gf(args) -> int:
    order = args.order
    if args.kind == "p":
        series = cf.p_series(order)
    elif args.kind == "kernel":
        L = _need(args.L, "L")
        u = L if args.u is None else args.u
        if L < 0 or not 0 <= u <= L:
            raise UsageError("need 0 <= u <= L")
        series = cf.kernel_gf(cf.LatticeWalkSpec(L, u), order)
    elif args.kind in ("return", "return-recursive"):
        m = _need(args.m, "m")
        if m < 0:
            raise UsageError("m must be ≥ 0")
        fn = cf.return_gf if args.kind == "return" else cf.return_gf_recursive
        series = fn(m, order)
    else:
        m = _need(args.m, "m")
        if m < 1:
            raise UsageError("m must be ≥ 1")
        if args.kind == "crossing":
            series = cf.crossing_gf(m, order)
        else:
            series = cf.two_type_gf(cf.TwoTypeSpec(m, order))
    _dump_series(series, args.kind, args)
    return 0


def run_enumerate(args) -> int:
    order = args.order
    if args.model == "two-type":
        m = _need(args.m, "m")
        if m < 1:
            raise UsageError("m must be ≥ 1")
        series = oracle.two_type_counts(m, order, switches=not args.no_switches)
    else:
        L = _need(args.L, "L")
        u = L if args.u is None else args.u
        if L < 0 or not 0 <= u <= L:
            raise UsageError("need 0 <= u <= L")
        if args.model == "walk":
            series = oracle.walk_counts(L, u, order)
        else:
            end = _need(args.end, "end")
            if not 0 <= end <= L:
                raise UsageError("need 0 <= end <= L")
            series = oracle.endpoint_filtered_counts(L, u, end, order)
    _dump_series(series, f"oracle-{args.model}", args)
    return 0


def run_verify(args) -> int:
    fn, lowest = THEOREMS[args.thm]
    limit = args.max_L if args.thm == 1 else args.max_m
    if limit is None:
        raise UsageError("--max-L is required" if args.thm == 1 else "--max-m is required")
    if limit < lowest:
        raise UsageError(f"range must reach at least {lowest}")
    checks = fn(limit, args.order)
    for c in checks:
        if not c.ok:
            print(f"MISMATCH {c.label}: {c.detail}")
            return 1
    print(f"theorem {args.thm}: all equal ({len(checks)} checks, order {args.order})")
    return 0


def run_markov(args) -> int:
    try:
        lam = Lambda.parse(args.lam)
    except ValueError as exc:
        raise UsageError(f"invalid lambda: {exc}")
    t = args.t
    if not 0 <= t <= 1:
        raise UsageError("t must lie in [0, 1]")
    tm = transition_matrix(lam)
    if args.symbolic:
        matrix = [[{"c0": rational_str(e.c0), "c1": rational_str(e.c1)} for e in row]
                  for row in tm.entries]
    else:
        matrix = [[rational_str(v) for v in row] for row in tm.evaluate(t)]
    try:
        pi = stationary(lam, t)
    except SingularChain as exc:
        print(f"singular chain: {exc}", file=sys.stderr)
        return 1
    payload = {
        "lambda": list(lam.parts),
        "t": rational_str(t),
        "states": [list(w) for w in tm.states],
        "matrix": matrix,
        "stationary": [rational_str(pi[w]) for w in tm.states],
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asepgf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def output_opts(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", default=None, help="write here instead of stdout")

    gf = sub.add_parser("gf", help="compute a closed-form series")
    gf.add_argument("--kind", choices=GF_KINDS, required=True)
    gf.add_argument("--order", type=int, default=20)
    gf.add_argument("--m", type=int)
    gf.add_argument("--L", type=int)
    gf.add_argument("--u", type=int)
    output_opts(gf)
    gf.set_defaults(func=run_gf)

    en = sub.add_parser("enumerate", help="brute-force oracle counts")
    en.add_argument("--model", choices=("walk", "endpoint", "two-type"), required=True)
    en.add_argument("--order", type=int, default=20)
    en.add_argument("--m", type=int)
    en.add_argument("--L", type=int)
    en.add_argument("--u", type=int)
    en.add_argument("--end", type=int)
    en.add_argument("--no-switches", action="store_true")
    output_opts(en)
    en.set_defaults(func=run_enumerate)

    ve = sub.add_parser("verify", help="compare closed forms with the oracle")
    ve.add_argument("--thm", type=int, choices=sorted(THEOREMS), required=True)
    ve.add_argument("--max-L", dest="max_L", type=int)
    ve.add_argument("--max-m", dest="max_m", type=int)
    ve.add_argument("--order", type=int, default=20)
    ve.set_defaults(func=run_verify)

    mk = sub.add_parser("markov", help="exact ASEP transition matrix and stationary law")
    mk.add_argument("--lambda", dest="lam", required=True, help="e.g. 2,1,0")
    mk.add_argument("--t", type=_rational, default=Fraction(1))
    mk.add_argument("--symbolic", action="store_true",
                    help="emit entries as c0 + c1*t instead of evaluating")
    mk.add_argument("--output", default=None)
    mk.set_defaults(func=run_markov)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", 0) < 0:
        print("asepgf: error: order must be ≥ 0", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"asepgf: error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"asepgf: computation failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
