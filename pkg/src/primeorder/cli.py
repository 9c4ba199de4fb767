"""Command-line front end.

Subcommands: generate (build + save a table), search (one feedback
search), bench (set-point suite with oracle cross-check), chars (static
characteristic CSV), info (table file inspection).

Exit codes: 0 success, 2 usage error, 3 I/O or table-file error,
4 search did not converge, 5 set-point not in the table.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .controller import ControllerConfig, Mode, Tuning
from .process import DEFAULT_AVERAGE_GAIN, export_static_characteristics
from .search import (
    DEFAULT_BENCHMARK_SETPOINTS,
    SearchRequest,
    SearchStatus,
    export_trace_csv,
    format_benchmark_summary,
    run_benchmark,
    run_search,
    write_benchmark_csv,
)
from .sieve import BACKEND
from .table import TableError, build_table, load_table, read_header, save_table

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NO_CONVERGENCE = 4
EXIT_NOT_IN_TABLE = 5

DEFAULT_TABLE_PATH = "primes.tbl"

_TUNING_ALIASES = {
    "balanced": Tuning.BALANCED,
    "log": Tuning.LOGARITHMIC,
    "logarithmic": Tuning.LOGARITHMIC,
    "explicit": Tuning.EXPLICIT,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeorder",
        description="Find prime index-orders with an integral feedback controller.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a prime table and save it")
    p.add_argument("-n", "--count", type=int, required=True, help="number of primes")
    p.add_argument("-o", "--out", default=DEFAULT_TABLE_PATH, help="output table path")

    p = sub.add_parser("search", help="search the order of one prime")
    p.add_argument("w", type=int, help="set-point: the prime whose order is sought")
    p.add_argument("--table", default=DEFAULT_TABLE_PATH, help="table file path")
    p.add_argument("--mode", choices=[m.value for m in Mode], default="integral")
    p.add_argument(
        "--tuning",
        choices=sorted(_TUNING_ALIASES),
        default="log",
        help="integration-constant rule (integral mode)",
    )
    p.add_argument("--ti", type=float, help="integration constant for --tuning explicit")
    p.add_argument(
        "--gain",
        type=float,
        default=DEFAULT_AVERAGE_GAIN,
        help="process gain used by the balanced tuning",
    )
    p.add_argument("--u0", type=float, default=1.0, help="initial controller state")
    p.add_argument("--max-steps", type=int, default=100, help="evaluation budget")
    p.add_argument("--trace", help="write the step trace to this CSV path")
    p.add_argument(
        "--no-precheck",
        action="store_true",
        help="skip the oracle membership pre-check (experiments only)",
    )

    p = sub.add_parser("bench", help="benchmark searches against the oracle")
    p.add_argument("--table", default=DEFAULT_TABLE_PATH, help="table file path")
    p.add_argument(
        "--setpoints",
        help="file with one set-point per line (default: built-in reference set)",
    )
    p.add_argument(
        "--modes",
        default="integral,proportion",
        help="comma-separated modes to run",
    )
    p.add_argument(
        "--tunings",
        default="log,balanced",
        help="comma-separated tunings for integral mode",
    )
    p.add_argument("--max-steps", type=int, default=100)
    p.add_argument("-o", "--out", help="write the report CSV here instead of stdout")

    p = sub.add_parser("chars", help="export static characteristic and gain CSV")
    p.add_argument("--table", default=DEFAULT_TABLE_PATH, help="table file path")
    p.add_argument("--samples", type=int, default=512, help="number of CSV rows")
    p.add_argument("-o", "--out", required=True, help="output CSV path")

    p = sub.add_parser("info", help="inspect a table file")
    p.add_argument("--table", default=DEFAULT_TABLE_PATH, help="table file path")

    return parser


def _load(path: str):
    try:
        return load_table(path)
    except (OSError, TableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None


def _cmd_generate(args) -> int:
    started = time.perf_counter()
    try:
        table = build_table(args.count)
        save_table(table, args.out)
    except (OSError, MemoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    elapsed = time.perf_counter() - started
    print(f"primes: {table.count}")
    print(f"largest: {table.largest}")
    print(f"elapsed: {elapsed:.3f} s ({BACKEND} backend)")
    print(f"written: {args.out}")
    return EXIT_OK


def _search_config(args) -> ControllerConfig:
    return ControllerConfig(
        mode=Mode(args.mode),
        tuning=_TUNING_ALIASES[args.tuning],
        ti=args.ti,
        max_steps=args.max_steps,
    )


def _cmd_search(args, parser: argparse.ArgumentParser) -> int:
    table = _load(args.table)
    if table is None:
        return EXIT_IO
    try:
        config = _search_config(args)
        request = SearchRequest(
            w=args.w,
            config=config,
            initial_u=args.u0,
            check_membership=not args.no_precheck,
            gain=args.gain,
        )
    except ValueError as exc:
        parser.error(str(exc))
    result = run_search(table, request)
    print(f"status: {result.status.value}")
    print(f"steps: {result.steps}")
    if result.converged:
        print(f"order: {result.order}")
    if args.trace and result.trace:
        export_trace_csv(result, args.trace)
        print(f"trace: {args.trace}")
    if result.converged:
        return EXIT_OK
    if result.status is SearchStatus.SETPOINT_NOT_IN_TABLE:
        return EXIT_NOT_IN_TABLE
    return EXIT_NO_CONVERGENCE


def _read_setpoints(path: str) -> list[int]:
    values = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            values.append(int(line))
    return values


def _bench_configs(args, parser: argparse.ArgumentParser) -> list[ControllerConfig]:
    configs = []
    modes = [m.strip() for m in args.modes.split(",") if m.strip()]
    tunings = [t.strip() for t in args.tunings.split(",") if t.strip()]
    for mode in modes:
        if mode not in (m.value for m in Mode):
            parser.error(f"unknown mode: {mode}")
        if mode == Mode.PROPORTION.value:
            configs.append(
                ControllerConfig(mode=Mode.PROPORTION, max_steps=args.max_steps)
            )
            continue
        for tuning in tunings:
            if tuning not in _TUNING_ALIASES:
                parser.error(f"unknown tuning: {tuning}")
            configs.append(
                ControllerConfig(
                    mode=Mode.INTEGRAL,
                    tuning=_TUNING_ALIASES[tuning],
                    max_steps=args.max_steps,
                )
            )
    if not configs:
        parser.error("no modes selected")
    return configs


def _cmd_bench(args, parser: argparse.ArgumentParser) -> int:
    table = _load(args.table)
    if table is None:
        return EXIT_IO
    if args.setpoints:
        try:
            setpoints = _read_setpoints(args.setpoints)
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        setpoints = [w for w in DEFAULT_BENCHMARK_SETPOINTS if w <= table.largest]
        if not setpoints:
            print("error: table too small for the built-in set-points", file=sys.stderr)
            return EXIT_USAGE
    report = run_benchmark(table, setpoints, _bench_configs(args, parser))
    if args.out:
        write_benchmark_csv(report, args.out)
        print(f"report: {args.out}")
    else:
        write_benchmark_csv(report, sys.stdout)
    print(format_benchmark_summary(report))
    return EXIT_OK if report.all_converged_and_agree else EXIT_NO_CONVERGENCE


def _cmd_chars(args, parser: argparse.ArgumentParser) -> int:
    if args.samples < 2:
        parser.error("--samples must be >= 2")
    table = _load(args.table)
    if table is None:
        return EXIT_IO
    try:
        rows = export_static_characteristics(table, args.samples, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"rows: {rows}")
    print(f"written: {args.out}")
    return EXIT_OK


def _cmd_info(args) -> int:
    try:
        header = read_header(args.table)
        table = load_table(args.table)
    except (OSError, TableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"file: {args.table}")
    print(f"version: {header.version}")
    print(f"primes: {header.count}")
    print(f"checksum: 0x{header.checksum:016x} (verified)")
    print(f"first: {table.nth_prime(1)}")
    print(f"largest: {table.largest}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "generate":
        if args.count < 1:
            parser.error("--count must be >= 1")
        return _cmd_generate(args)
    if args.command == "search":
        return _cmd_search(args, parser)
    if args.command == "bench":
        return _cmd_bench(args, parser)
    if args.command == "chars":
        return _cmd_chars(args, parser)
    return _cmd_info(args)


if __name__ == "__main__":
    sys.exit(main())
