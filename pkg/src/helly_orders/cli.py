"""Command line front end.

Exit status: 0 for a positive answer, 1 for a negative one, 2 on errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import oracle, solvers
from .constructions import FAMILIES, generate
from .core import LinearOrder, MarkVariant, check_order
from .errors import HypergraphError, ParseError
from .formats import (
    format_census,
    format_check,
    format_scan,
    format_verdict,
    parse_instance,
    serialize_instance,
)
from .helly import DEFAULT_BUDGET, census_exhaustive, census_random, decide_exists, scan_subsets

YES, NO, ERROR = 0, 1, 2


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_instance(text)


def _parse_order(text: str) -> LinearOrder:
    try:
        return LinearOrder(tuple(int(t) for t in text.split(",") if t.strip()))
    except ValueError:
        raise ParseError(f"bad order {text!r}; expected comma-separated ids") from None


def cmd_solve(args) -> int:
    H = _load(args.path)
    if args.count:
        result = oracle.count(H)
    elif args.oracle:
        result = oracle.decide(H)
    else:
        result = solvers.solve(H)
    sys.stdout.write(format_verdict(result, with_count=args.count))
    return YES if result.exists else NO


def cmd_check(args) -> int:
    H = _load(args.path)
    verdict = check_order(H, _parse_order(args.order))
    sys.stdout.write(format_check(verdict))
    return YES if verdict.agrees else NO


def cmd_gen(args) -> int:
    H = generate(args.family, args.r, n=args.n, m=args.m, variant=args.variant)
    text = serialize_instance(H)
    if args.out:
        Path(args.out).write_text(text, encoding="ascii", newline="\n")
    else:
        sys.stdout.write(text)
    return YES


def cmd_helly(args) -> int:
    H = _load(args.path)
    report = scan_subsets(H, args.k, decide_exists)
    text = format_scan(report)
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text, encoding="ascii", newline="\n")
    return YES if report.whole_exists else NO


def cmd_census(args) -> int:
    variant = MarkVariant.parse(args.variant)
    if args.samples is not None:
        seed = 0 if args.seed is None else args.seed
        report = census_random(variant, args.r, args.n, args.k, args.samples, seed, jobs=args.jobs)
    else:
        report = census_exhaustive(variant, args.r, args.n, args.k, budget=args.budget, jobs=args.jobs)
    sys.stdout.write(format_census(report))
    return YES if report.counterexample_count == 0 else NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="helly-orders", description="Agreeing linear orders of marked uniform hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide whether an instance has an agreeing order")
    p.add_argument("path")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--oracle", action="store_true", help="use the exhaustive search")
    how.add_argument("--structured", action="store_true", help="use the variant's solver (default)")
    p.add_argument("--count", action="store_true", help="also count all agreeing orders")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="check one order against an instance")
    p.add_argument("path")
    p.add_argument("--order", required=True, help="comma-separated vertex ids")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write an instance of a named family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--variant", default="two-extreme", help="mark variant for the natural family")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("helly", help="decide every k-subset and the whole instance")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_helly)

    p = sub.add_parser("census", help="check a Helly claim over all or sampled markings")
    p.add_argument("--variant", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HypergraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
