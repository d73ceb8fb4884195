"""Command line front end.

Subcommands: construct (build and save a factorization), verify (audit a
saved one), schedule (render a saved one as a meeting schedule), check
(test the arithmetic conditions without building anything).

Exit codes: 0 success, 1 a verified artifact failed its audit, 2 bad input
(malformed arguments or files, or conditions that reject the instance),
3 internal defect (the construction contradicted itself; always a bug).
"""

from __future__ import annotations

import argparse
import sys

from .designfile import read_design, serialize_design, write_design
from .errors import ConditionError, InternalDefectError
from .model import Params
from .pipeline import construct_design, uniform_params
from .report import render_schedule_figure, schedule_lines, write_schedule_csv
from .verify import check_sufficiency, check_uniform, verify_factorization


def _parse_r(text: str) -> tuple[int, ...]:
    try:
        r = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"--r wants comma-separated integers, got {text!r}") from None
    if not r:
        raise ValueError("--r must list at least one degree")
    return r


def _add_instance_args(sub: argparse.ArgumentParser):
    sub.add_argument("--lambda", dest="lam", type=int, required=True, metavar="N",
                     help="fold count: copies of each allowed triple")
    sub.add_argument("--m", type=int, required=True, help="vertices per part")
    sub.add_argument("--n", type=int, required=True, help="number of parts")
    degrees = sub.add_mutually_exclusive_group(required=True)
    degrees.add_argument("--r", type=_parse_r, metavar="R1,R2,...",
                         help="per-factor degrees, comma separated")
    degrees.add_argument("--uniform-r", type=int, metavar="R",
                         help="one degree for every factor; the factor count is derived")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifactor",
        description="Factor triple systems on equal parts into regular spanning layers.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("construct", help="build a factorization and write it out")
    _add_instance_args(p)
    p.add_argument("--out", help="design file path (default: print to stdout)")
    p.add_argument("--trace", action="store_true",
                   help="re-audit every invariant after every detachment step")
    p.add_argument("--seed", type=int, default=0,
                   help="accepted for script compatibility; the construction is "
                        "deterministic, so this changes nothing")

    p = subs.add_parser("verify", help="audit a design file from scratch")
    p.add_argument("design", help="path to a design file")

    p = subs.add_parser("schedule", help="render a design file as a meeting schedule")
    p.add_argument("design", help="path to a design file")
    p.add_argument("--out", help="write the text schedule here instead of stdout")
    p.add_argument("--csv", help="also write day,meeting,person rows to this path")
    p.add_argument("--figure", help="also render a membership grid image to this path")

    p = subs.add_parser("check", help="test the arithmetic conditions only")
    _add_instance_args(p)

    return parser


def _cmd_construct(args) -> int:
    if args.uniform_r is not None:
        params = uniform_params(args.lam, args.m, args.n, args.uniform_r)
    else:
        params = Params(args.lam, args.m, args.n, args.r)
    design = construct_design(params, check_each_step=args.trace)
    if args.out:
        write_design(design, args.out)
        print(f"wrote {args.out}: {design.order} vertices, "
              f"{design.edge_count()} edges in {params.k} factors")
    else:
        sys.stdout.write(serialize_design(design))
    return 0


def _cmd_verify(args) -> int:
    design = read_design(args.design)
    report = verify_factorization(design)
    print(report)
    return 0 if report.passed else 1


def _cmd_schedule(args) -> int:
    design = read_design(args.design)
    text = "\n".join(schedule_lines(design)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        write_schedule_csv(design, args.csv)
    if args.figure:
        render_schedule_figure(design, args.figure)
    return 0


def _cmd_check(args) -> int:
    if args.uniform_r is not None:
        report, k = check_uniform(args.lam, args.m, args.n, args.uniform_r)
        if k is not None:
            print(f"factor count k = {k}")
        print(report)
    else:
        report = check_sufficiency(Params(args.lam, args.m, args.n, args.r))
        print(report)
    return 0 if report.passed else 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "schedule": _cmd_schedule,
        "check": _cmd_check,
    }[args.command]
    try:
        return handler(args)
    except ConditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(exc.report, file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalDefectError as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return 3


def run():
    sys.exit(main())
