"""Command line front end.

    mapcensus rooted --surface torus --r 5 --max-v 2
    mapcensus sensed --r 4 --max-v 4 --format json
    mapcensus verify all
    mapcensus cache store --r 6 --max-v 10 --cache-dir ~/.cache/mapcensus

Rows for odd ``r`` are indexed like the reference tables: row ``k`` holds
maps with ``2k`` vertices.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from mapcensus.bigmath import NonExactDivision
from mapcensus.cache import CacheError, cache_load, cache_path, cache_store, warm_engine
from mapcensus.oracle import DEFAULT_MAX_DARTS, BudgetExceeded
from mapcensus.recurrences import SURFACES, engine, rooted_regular
from mapcensus.verify import SUITES, rooted_tag, rows_for, run_suite, sensed_tag, sensed_value

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2  # argparse itself exits with EXIT_USAGE
CACHED_FAMILIES = ("s", "t", "p", "b")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _degree(text: str) -> int:
    value = _positive(text)
    if value < 3:
        raise argparse.ArgumentTypeError(f"degree must be >= 3, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mapcensus", description="Exact counts of r-regular maps.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def table_args(p):
        p.add_argument("--r", type=_degree, required=True)
        p.add_argument("--max-v", type=_positive, required=True)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--cache-dir", default=None)

    p = sub.add_parser("rooted", help="rooted r-regular maps on a surface")
    p.add_argument("--surface", choices=SURFACES, required=True)
    table_args(p)

    p = sub.add_parser("sensed", help="sensed r-regular maps on the torus")
    table_args(p)

    p = sub.add_parser("verify", help="compare against reference values and oracles")
    p.add_argument("suite", nargs="?", choices=SUITES, default="all")
    p.add_argument("--budget-darts", type=_positive, default=DEFAULT_MAX_DARTS)
    p.add_argument("--quiet", action="store_true", help="only print failures and the summary")

    p = sub.add_parser("cache", help="store or load recurrence tables on disk")
    p.add_argument("action", choices=("store", "load"))
    p.add_argument("--r", type=_degree, required=True)
    p.add_argument("--max-v", type=_positive, default=10)
    p.add_argument("--cache-dir", required=True)
    return parser


def _emit(family: str, rows, fmt: str, out) -> None:
    if fmt == "json":
        records = [{"family": family, "index": k, "value": str(value)} for k, value in rows]
        json.dump(records, out, indent=1)
        out.write("\n")
    else:
        out.write("v,count\n")
        for k, value in rows:
            out.write(f"{k},{value}\n")


def _max_edges(r: int, v_max: int) -> int:
    return r * max(v for _, v in rows_for(r, v_max)) // 2


def cmd_rooted(args, out) -> int:
    if args.cache_dir:
        warm_engine(engine(args.r), args.cache_dir, _max_edges(args.r, args.max_v), CACHED_FAMILIES)
    rows = [(k, rooted_regular(args.surface, args.r, v)) for k, v in rows_for(args.r, args.max_v)]
    _emit(rooted_tag(args.surface, args.r), rows, args.format, out)
    return EXIT_OK


def cmd_sensed(args, out) -> int:
    if args.cache_dir:
        warm_engine(engine(args.r), args.cache_dir, _max_edges(args.r, args.max_v), CACHED_FAMILIES)
    try:
        rows = [(k, sensed_value(args.r, v)) for k, v in rows_for(args.r, args.max_v)]
    except NonExactDivision as exc:
        print(f"integrality failure: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    _emit(sensed_tag(args.r), rows, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    passed = failed = 0
    try:
        for comparison in run_suite(args.suite, args.budget_darts):
            if comparison.ok:
                passed += 1
            else:
                failed += 1
            if not comparison.ok or not args.quiet:
                out.write(f"{comparison}\n")
    except (NonExactDivision, BudgetExceeded) as exc:
        out.write(f"FAIL error: {exc}\n")
        failed += 1
    out.write(f"{passed} passed, {failed} failed\n")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def cmd_cache(args, out) -> int:
    path = cache_path(args.cache_dir, args.r)
    if args.action == "store":
        n_max = _max_edges(args.r, args.max_v)
        tables = [engine(args.r).get(sym, n_max) for sym in CACHED_FAMILIES]
        cache_store(path, tables, n_max)
        out.write(f"stored {path}\n")
        return EXIT_OK
    try:
        tables = cache_load(path)
    except (CacheError, OSError) as exc:
        print(f"cannot load {path}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    for sym, table in tables.items():
        out.write(f"{sym}\tn_max={table.n_max}\n")
    return EXIT_OK


COMMANDS = {"rooted": cmd_rooted, "sensed": cmd_sensed, "verify": cmd_verify, "cache": cmd_cache}


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    return COMMANDS[args.command](args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
