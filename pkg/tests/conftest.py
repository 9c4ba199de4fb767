"""Shared fixtures: prime tables at the sizes the tests need.

Tables are immutable, so one instance per size serves the whole session.
The 30M table is built lazily; only the acceptance module asks for it.
"""

from __future__ import annotations

import time

import pytest

from primeorder import PrimeTable, build_table


@pytest.fixture(scope="session")
def table_1e4() -> PrimeTable:
    return build_table(10_000)


@pytest.fixture(scope="session")
def table_1e6() -> PrimeTable:
    return build_table(1_000_000)


@pytest.fixture(scope="session")
def table_1e7() -> PrimeTable:
    return build_table(10_000_000)


@pytest.fixture(scope="session")
def table_3e7_timed() -> tuple[PrimeTable, float]:
    """The full 30M-prime reference table plus its build time in seconds."""
    started = time.perf_counter()
    table = build_table(30_000_000)
    return table, time.perf_counter() - started
