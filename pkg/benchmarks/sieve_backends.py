#!/usr/bin/env python3
"""Benchmark the pure-Python sieve kernel against the compiled one.

Runs ``sieve_first_n`` at a few sizes plus the payload checksum, prints a
timing table with speedups, and verifies both backends produce identical
output while at it.

Usage:
    python benchmarks/sieve_backends.py [--counts 100000,1000000,5000000] [--repeats 3]
"""

from __future__ import annotations

import argparse
import sys
import time

from primeorder import _sieve_py
from primeorder.table import sieve_bound

try:
    from primeorder import _sieve_cy
except ImportError:
    _sieve_cy = None


def best_of(repeats: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - started)
    return best


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--counts",
        default="100000,1000000,5000000",
        help="comma-separated prime counts to sieve",
    )
    parser.add_argument("--repeats", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args(argv)
    counts = [int(c) for c in args.counts.split(",") if c.strip()]

    if _sieve_cy is None:
        print("compiled backend not built; timing the pure-Python kernel only")

    rows = []
    for n in counts:
        limit = sieve_bound(n)
        py_primes = _sieve_py.sieve_first_n(n, limit)
        py_time = best_of(args.repeats, _sieve_py.sieve_first_n, n, limit)
        if _sieve_cy is not None:
            cy_primes = _sieve_cy.sieve_first_n(n, limit)
            assert cy_primes == py_primes, f"backend outputs differ at n={n}"
            cy_time = best_of(args.repeats, _sieve_cy.sieve_first_n, n, limit)
            rows.append((f"sieve n={n:>9,}", py_time, cy_time))
        else:
            rows.append((f"sieve n={n:>9,}", py_time, None))

    payload = _sieve_py.sieve_first_n(counts[-1], sieve_bound(counts[-1]))
    py_fnv = best_of(args.repeats, _sieve_py.fnv1a64, payload)
    if _sieve_cy is not None:
        assert _sieve_cy.fnv1a64(payload) == _sieve_py.fnv1a64(payload)
        cy_fnv = best_of(args.repeats, _sieve_cy.fnv1a64, payload)
        rows.append((f"fnv1a64 {len(payload):>9,} x u64", py_fnv, cy_fnv))
    else:
        rows.append((f"fnv1a64 {len(payload):>9,} x u64", py_fnv, None))

    print(f"{'kernel':<28} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, py_time, cy_time in rows:
        if cy_time is None:
            print(f"{label:<28} {py_time:>9.3f}s {'-':>10} {'-':>8}")
        else:
            print(f"{label:<28} {py_time:>9.3f}s {cy_time:>9.3f}s {py_time / cy_time:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
