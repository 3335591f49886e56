"""Command-line entry point: ``chernkit run FILE`` and ``chernkit worked-examples``."""

from __future__ import annotations

import argparse
import json
import sys

from ..groebner import DEFAULT_MAX_DEGREE, DEFAULT_MAX_PAIRS
from .parser import ParseError, parse
from .runner import SCHEMA, RunOptions, format_human, run


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chernkit", description="Hilbert coefficients and Chern numbers")
    sub = ap.add_subparsers(dest="action", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="print a JSON report")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for table rows")
        p.add_argument("--no-timing", action="store_true", help="omit timings (byte-stable output)")
        p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
        p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)

    r = sub.add_parser("run", help="execute the commands in an input file")
    r.add_argument("file")
    r.add_argument("--nmax", type=int, default=None, help="default table length for commands without 'max'")
    r.add_argument("--fail-fast", action="store_true", help="stop after the first failing command")
    common(r)

    e = sub.add_parser("worked-examples", aliases=["paper-examples"],
                       help="reproduce the built-in worked examples")
    common(e)
    return ap


def _options(args) -> RunOptions:
    return RunOptions(n_max=getattr(args, "nmax", None), jobs=max(1, args.jobs),
                      fail_fast=getattr(args, "fail_fast", False), timing=not args.no_timing,
                      max_pairs=args.max_pairs, max_degree=args.max_degree)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.action == "run":
        try:
            with open(args.file, encoding="utf-8") as fh:
                source = fh.read()
        except OSError as exc:
            print(f"chernkit: cannot read {args.file}: {exc}", file=sys.stderr)
            return 2
    else:
        source = "worked-examples;"
    try:
        doc = parse(source)
    except ParseError as exc:
        if args.json:
            print(json.dumps({"schema": SCHEMA, "ok": False, "parse_error": {
                "category": exc.category, "line": exc.location.line,
                "column": exc.location.column, "message": exc.message}}, sort_keys=True, indent=2))
        else:
            print(f"{args.file}:{exc}", file=sys.stderr)
        return 2
    report = run(doc, _options(args))
    if args.json:
        print(json.dumps(report.as_dict(), sort_keys=True, indent=2))
    else:
        print(format_human(report))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
