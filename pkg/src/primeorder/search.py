"""Search orchestration: run the feedback loop, record traces, benchmark.

A search iterates evaluate -> error -> controller update until the error
hits zero, the step budget runs out, or the exact controller state recurs
(a cycle). One step means one process evaluation; the evaluation at the
initial state counts as step 1.
"""

from __future__ import annotations

import csv
import statistics
from dataclasses import dataclass, replace
from enum import Enum
from math import floor
from pathlib import Path
from typing import Sequence, TextIO

from .controller import (
    ControllerConfig,
    ControllerState,
    Mode,
    StepRecord,
    Tuning,
    integral_step,
    proportion_step,
    tune_balanced,
    tune_logarithmic,
)
from .process import GainModel, PrimeProcess, StaticProcess
from .table import PrimeTable

# Canonical benchmark set-points exercised by `primeorder bench`.
DEFAULT_BENCHMARK_SETPOINTS = (86_028_121, 141_650_939, 533_000_389)


class SearchStatus(str, Enum):
    CONVERGED = "converged"
    BUDGET_EXHAUSTED = "budget_exhausted"
    CYCLE_DETECTED = "cycle_detected"
    SETPOINT_NOT_IN_TABLE = "setpoint_not_in_table"


@dataclass(frozen=True)
class SearchRequest:
    """One search: set-point w, controller configuration, starting state.

    ``gain`` overrides the average-gain constant for the balanced tuning.
    ``check_membership`` pre-checks w against the process inverse so absent
    set-points return a status instead of looping; disable it only for
    experiments (budget and cycle detection still terminate the run).
    """

    w: int
    config: ControllerConfig
    initial_u: float = 1.0
    check_membership: bool = True
    gain: float | None = None


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    order: int | None
    steps: int
    trace: tuple[StepRecord, ...]
    w: int

    @property
    def converged(self) -> bool:
        return self.status is SearchStatus.CONVERGED


def resolve_tuning(request: SearchRequest, gain_model: GainModel | None = None) -> float:
    """Integration time constant for the request's tuning rule."""
    model = gain_model or GainModel()
    tuning = request.config.tuning
    if tuning is Tuning.BALANCED:
        return tune_balanced(request.gain if request.gain is not None else model.average_gain)
    if tuning is Tuning.LOGARITHMIC:
        return tune_logarithmic(request.w)
    return request.config.ti


def _as_process(source: PrimeTable | StaticProcess) -> StaticProcess:
    if isinstance(source, PrimeTable):
        return PrimeProcess(source)
    return source


def run_search(
    source: PrimeTable | StaticProcess,
    request: SearchRequest,
    gain_model: GainModel | None = None,
) -> SearchResult:
    """Run one feedback search; the update rule follows config.mode.

    Convergence means e = 0 exactly, at which point floor(u) is the order
    of the set-point. The trace holds every evaluation including the
    terminal one.
    """
    process = _as_process(source)
    config = request.config
    if config.mode is Mode.INTEGRAL:
        config = replace(config, ti=resolve_tuning(request, gain_model))
    if config.clamp_high is None:
        config = replace(config, clamp_high=float(process.input_high))
    if not config.clamp_low <= request.initial_u <= config.clamp_high:
        raise ValueError("initial_u outside the clamp bounds")

    w = request.w
    if request.check_membership and process.find_order(w) is None:
        return SearchResult(SearchStatus.SETPOINT_NOT_IN_TABLE, None, 0, (), w)

    state = ControllerState(u=float(request.initial_u), k=0)
    trace: list[StepRecord] = []
    # Exact controller states already produced, keyed by the floored pair
    # (current, next); a recurrence replays the whole trajectory.
    seen: dict[tuple[int, int], set[float]] = {}

    for k in range(1, config.max_steps + 1):
        f = int(floor(state.u))
        y = process.evaluate(state.u)
        e = w - y
        trace.append(StepRecord(k=k, u_real=state.u, u_floored=f, y=y, e=e))
        if e == 0:
            return SearchResult(SearchStatus.CONVERGED, f, k, tuple(trace), w)
        if k == config.max_steps:
            break
        if config.mode is Mode.INTEGRAL:
            nxt = integral_step(state, e, config)
        else:
            nxt = proportion_step(state, w, y, config)
        pair = (f, int(floor(nxt.u)))
        states = seen.setdefault(pair, set())
        if nxt.u in states:
            return SearchResult(SearchStatus.CYCLE_DETECTED, None, k, tuple(trace), w)
        states.add(nxt.u)
        state = nxt

    return SearchResult(
        SearchStatus.BUDGET_EXHAUSTED, None, len(trace), tuple(trace), w
    )


def run_proportion_search(
    source: PrimeTable | StaticProcess, request: SearchRequest
) -> SearchResult:
    """Run the proportion iteration u' = u * w / y regardless of config.mode."""
    config = replace(request.config, mode=Mode.PROPORTION)
    return run_search(source, replace(request, config=config))


def export_trace_csv(result: SearchResult, destination: str | Path | TextIO) -> None:
    """Write the trace as CSV rows ``k,u_real,u_floored,y,e``."""
    if not result.trace:
        raise ValueError("empty trace")
    owned = isinstance(destination, (str, Path))
    f = open(destination, "w", newline="") if owned else destination
    try:
        writer = csv.writer(f)
        writer.writerow(["k", "u_real", "u_floored", "y", "e"])
        for rec in result.trace:
            writer.writerow([rec.k, repr(rec.u_real), rec.u_floored, rec.y, rec.e])
    finally:
        if owned:
            f.close()


@dataclass(frozen=True)
class BenchmarkEntry:
    w: int
    mode: str
    tuning: str
    steps: int
    status: str
    controller_order: int | None
    oracle_order: int | None
    agree: bool


@dataclass(frozen=True)
class BenchmarkReport:
    """Per-set-point search outcomes plus step aggregates.

    ``agreement_rate`` is the fraction of converged rows whose order
    matches the binary-search oracle, None when nothing converged.
    """

    entries: tuple[BenchmarkEntry, ...]
    min_steps: int | None
    median_steps: float | None
    max_steps: int | None
    agreement_rate: float | None

    @classmethod
    def from_entries(cls, entries: Sequence[BenchmarkEntry]) -> "BenchmarkReport":
        converged = [e for e in entries if e.status == SearchStatus.CONVERGED.value]
        if not converged:
            return cls(tuple(entries), None, None, None, None)
        steps = [e.steps for e in converged]
        rate = sum(e.agree for e in converged) / len(converged)
        return cls(tuple(entries), min(steps), statistics.median(steps), max(steps), rate)

    @property
    def all_converged_and_agree(self) -> bool:
        return bool(self.entries) and all(
            e.status == SearchStatus.CONVERGED.value and e.agree for e in self.entries
        )


def run_benchmark(
    table: PrimeTable,
    setpoints: Sequence[int],
    configs: Sequence[ControllerConfig],
    initial_u: float = 1.0,
) -> BenchmarkReport:
    """Run every (set-point, config) pair and cross-check the oracle."""
    entries = []
    for w in setpoints:
        oracle_order = table.inverse_lookup(w)
        for config in configs:
            result = run_search(table, SearchRequest(w=w, config=config, initial_u=initial_u))
            agree = result.converged and result.order == oracle_order
            entries.append(
                BenchmarkEntry(
                    w=w,
                    mode=config.mode.value,
                    tuning=config.tuning.value,
                    steps=result.steps,
                    status=result.status.value,
                    controller_order=result.order,
                    oracle_order=oracle_order,
                    agree=agree,
                )
            )
    return BenchmarkReport.from_entries(entries)


def write_benchmark_csv(report: BenchmarkReport, destination: str | Path | TextIO) -> None:
    """CSV rows ``w,mode,tuning,steps,status,controller_order,oracle_order,agree``."""
    owned = isinstance(destination, (str, Path))
    f = open(destination, "w", newline="") if owned else destination
    try:
        writer = csv.writer(f)
        writer.writerow(
            ["w", "mode", "tuning", "steps", "status", "controller_order", "oracle_order", "agree"]
        )
        for e in report.entries:
            writer.writerow(
                [
                    e.w,
                    e.mode,
                    e.tuning,
                    e.steps,
                    e.status,
                    "" if e.controller_order is None else e.controller_order,
                    "" if e.oracle_order is None else e.oracle_order,
                    str(e.agree).lower(),
                ]
            )
    finally:
        if owned:
            f.close()


def format_benchmark_summary(report: BenchmarkReport) -> str:
    """Human-readable summary block for a benchmark report."""
    lines = [f"rows: {len(report.entries)}"]
    converged = sum(
        e.status == SearchStatus.CONVERGED.value for e in report.entries
    )
    lines.append(f"converged: {converged}/{len(report.entries)}")
    if report.min_steps is None:
        lines.append("steps: n/a")
        lines.append("oracle agreement: n/a")
    else:
        lines.append(
            f"steps: min {report.min_steps} / median {report.median_steps}"
            f" / max {report.max_steps}"
        )
        lines.append(f"oracle agreement: {report.agreement_rate:.1%}")
    return "\n".join(lines)
