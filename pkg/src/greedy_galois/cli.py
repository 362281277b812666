"""Command-line interface.

Exit codes: 0 success, 1 verification failure or MISMATCH, 2 usage error,
3 simulation or classification cap exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from .convergence import (
    DEFAULT_CAP,
    DEFAULT_N_CAP,
    CapExceeded,
    NCapExceeded,
    agreement_length_closed_form,
    agreement_length_simulated,
    classify,
)
from .game import GameParameter, greedy_sequence
from .numerics import BoundaryPolynomial, approx_boundary, format_rational, to_rational
from .sweep import Grid, SweepMismatch, SweepSpec, format_decimal, run_sweep, write_csv
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _rational(text: str) -> Fraction:
    try:
        return to_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_probability(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--q", type=_rational, help="miss probability, e.g. 2/3 or 0.64")
    group.add_argument("--p", type=_rational, help="hit probability p = 1 - q")


def _param(parser: argparse.ArgumentParser, args) -> GameParameter:
    q = args.q if args.q is not None else 1 - args.p
    try:
        return GameParameter(q)
    except ValueError as exc:
        parser.error(str(exc))


def cmd_shots(args) -> int:
    seq = greedy_sequence(args.param, args.length)
    print(" ".join(str(int(s)) for s in seq.shots))
    print(seq.names())
    if seq.tie_encountered:
        print("warning: a tie occurred after the first shot", file=sys.stderr)
    return EXIT_OK


def cmd_lq(args) -> int:
    q = args.param.q
    closed = sim = None
    if args.mode in ("closed", "both"):
        closed = agreement_length_closed_form(q, args.ncap).length
    if args.mode in ("sim", "both"):
        result = agreement_length_simulated(args.param, args.cap)
        sim = result.length
        if result.tie_flag:
            print("warning: a tie occurred during simulation", file=sys.stderr)
    if args.mode == "closed":
        print(closed)
    elif args.mode == "sim":
        print(sim)
    else:
        verdict = "MATCH" if closed == sim else "MISMATCH"
        print(f"closed={closed} sim={sim} {verdict}")
        if closed != sim:
            return EXIT_FAIL
    return EXIT_OK


def cmd_classify(args) -> int:
    interval = classify(args.param.q, args.ncap)
    print(f"{interval.render()} L={interval.length}")
    return EXIT_OK


def cmd_boundaries(args) -> int:
    digits = math.ceil(args.bits * math.log10(2)) + 1
    for name, poly in (("alpha", BoundaryPolynomial.QUADRATIC), ("beta", BoundaryPolynomial.QUARTIC)):
        lo, hi = approx_boundary(poly, args.bits)
        mid = (lo + hi) / 2
        print(f"{name}: [{format_rational(lo)}, {format_rational(hi)}] "
              f"~ {format_decimal(mid, digits)} (width <= 2^-{args.bits})")
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        if args.inv_p_min is not None or args.inv_p_max is not None:
            if args.inv_p_min is None or args.inv_p_max is None:
                args.parser.error("--inv-p-min and --inv-p-max go together")
            spec = SweepSpec.from_inverse_p(args.inv_p_min, args.inv_p_max, args.steps)
        else:
            spec = SweepSpec(args.q_min, args.q_max, args.steps, Grid(args.grid))
    except (ValueError, ZeroDivisionError) as exc:
        args.parser.error(str(exc))
    try:
        rows = run_sweep(spec, simulate=not args.no_sim, cap=args.cap, n_cap=args.ncap)
    except SweepMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out == "-":
        write_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            write_csv(rows, fh)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_suites(args.suite, args.seed, cap=args.cap)
    status = EXIT_OK
    for report in reports:
        print(report.line())
        if not report.ok:
            print(f"  first counterexample: {report.failure}")
            status = EXIT_FAIL
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greedy-galois",
        description="Greedy Galois game shot sequences and their agreement with Thue-Morse.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shots", help="print the first greedy shots")
    _add_probability(p)
    p.add_argument("--length", type=_positive_int, default=16)
    p.set_defaults(parser=p, func=cmd_shots, needs_param=True)

    p = sub.add_parser("lq", help="agreement length with Thue-Morse")
    _add_probability(p)
    p.add_argument("--mode", choices=("sim", "closed", "both"), default="both")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP)
    p.add_argument("--ncap", type=_positive_int, default=DEFAULT_N_CAP)
    p.set_defaults(parser=p, func=cmd_lq, needs_param=True)

    p = sub.add_parser("classify", help="interval class of q")
    _add_probability(p)
    p.add_argument("--ncap", type=_positive_int, default=DEFAULT_N_CAP)
    p.set_defaults(parser=p, func=cmd_classify, needs_param=True)

    p = sub.add_parser("boundaries", help="bisection brackets for alpha and beta")
    p.add_argument("--bits", type=_positive_int, default=40)
    p.set_defaults(parser=p, func=cmd_boundaries)

    p = sub.add_parser("sweep", help="write a CSV of L_q over a grid of q")
    p.add_argument("--q-min", type=_rational, default=Fraction(1, 10))
    p.add_argument("--q-max", type=_rational, default=Fraction(99, 100))
    p.add_argument("--inv-p-min", type=_rational, help="grid uniform in 1/p starting here")
    p.add_argument("--inv-p-max", type=_rational)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--grid", choices=[g.value for g in Grid], default=Grid.UNIFORM_Q.value)
    p.add_argument("--no-sim", action="store_true", help="closed form only")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP)
    p.add_argument("--ncap", type=_positive_int, default=DEFAULT_N_CAP)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(parser=p, func=cmd_sweep)

    p = sub.add_parser("verify", help="run the seeded self-check suites")
    p.add_argument("suite", nargs="?", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP)
    p.set_defaults(parser=p, func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "needs_param", False):
        args.param = _param(args.parser, args)
    try:
        return args.func(args)
    except (CapExceeded, NCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
