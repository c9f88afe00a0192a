"""Command line: ``pbheap sort | check | bench``.

Exit codes: 0 success, 1 property failure, 2 input error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from .bench import INT64_MAX, INT64_MIN, run_bench, write_csv
from .checks import FAULTS, format_ops, run_checks
from .update import drain, heapify

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2

_INT = re.compile(r"[+-]?[0-9]+")


class InputError(ValueError):
    pass


def parse_int64_lines(text: str) -> list[int]:
    values = []
    for lineno, line in enumerate(text.split("\n"), 1):
        token = line.strip()
        if not token and lineno == text.count("\n") + 1:
            break  # trailing newline
        if not _INT.fullmatch(token):
            raise InputError(f"line {lineno}: not an integer: {line!r}")
        value = int(token)
        if not INT64_MIN <= value <= INT64_MAX:
            raise InputError(f"line {lineno}: outside the 64-bit signed range: {token}")
        values.append(value)
    return values


def _parse_sizes(arg: str) -> list[int]:
    try:
        sizes = [int(s) for s in arg.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {arg!r}")
    if not sizes or any(n < 1 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def cmd_sort(args) -> int:
    try:
        if args.input in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as f:
                text = f.read()
        values = parse_int64_lines(text)
    except (OSError, InputError, UnicodeDecodeError) as e:
        print(f"pbheap sort: {e}", file=sys.stderr)
        return EXIT_INPUT
    out = sys.stdout
    for x in drain(heapify(values)):
        out.write(f"{x}\n")
    return EXIT_OK


def cmd_check(args) -> int:
    report = run_checks(args.seed, args.ops, args.fault)
    for r in report.results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name}: {r.detail}")
        if r.counterexample is not None:
            print(f"  counterexample ({len(r.counterexample)} ops): {format_ops(r.counterexample)}")
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_bench(args) -> int:
    try:
        out = sys.stdout if args.out == "-" else open(args.out, "w", encoding="utf-8", newline="")
    except OSError as e:
        print(f"pbheap bench: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        rows = write_csv(run_bench(args.sizes, args.reps, args.seed), out)
    finally:
        if out is not sys.stdout:
            out.close()
    if args.out != "-":
        print(f"wrote {rows} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pbheap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", help="sort newline-separated 64-bit integers")
    p.add_argument("input", nargs="?", help="input file (default: stdin)")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("check", help="run the differential and invariant checks")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--ops", type=int, default=10000)
    # mutation smoke test: run the library with a broken ordering
    p.add_argument("--fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="write instrumented benchmark results as CSV")
    p.add_argument("--sizes", type=_parse_sizes, default=[1023, 16383, 262143])
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", default="bench.csv", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if getattr(args, "ops", 0) < 0 or getattr(args, "reps", 1) < 0:
        print("pbheap: counts must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
