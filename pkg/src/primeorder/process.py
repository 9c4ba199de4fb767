"""Static process views and gain models.

A static process is a memoryless map from a real-valued input u to an
output y; flooring happens here, at the process boundary, so controllers
may carry real-valued state. The prime process is y = p(floor(u)) over a
PrimeTable; the linear process y = K * floor(u) exists to demonstrate the
one-step property of the proportion iteration.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from math import floor, log
from pathlib import Path
from typing import TextIO

from .table import PrimeTable

# Average gain of the prime process over the reference 30M-prime table.
DEFAULT_AVERAGE_GAIN = 18.0


class ProcessDomainError(ValueError):
    """Input floors outside the valid order range of the process."""


class StaticProcess:
    """Deterministic, side-effect-free map from real u to output y.

    Subclasses define the valid floored-input range [input_low, input_high],
    the evaluation itself, and an independent inverse used for set-point
    membership checks.
    """

    input_low: int = 1
    input_high: int

    def _floored(self, u: float) -> int:
        v = floor(u)
        if not self.input_low <= v <= self.input_high:
            raise ProcessDomainError(
                f"floor({u}) = {v} outside [{self.input_low}, {self.input_high}]"
            )
        return int(v)

    def evaluate(self, u: float):
        raise NotImplementedError

    def find_order(self, w) -> int | None:
        """Inverse of the process for exact outputs, None when absent."""
        raise NotImplementedError


class PrimeProcess(StaticProcess):
    """y = p(floor(u)) over an immutable prime table."""

    def __init__(self, table: PrimeTable):
        self.table = table
        self.input_high = table.count

    def evaluate(self, u: float) -> int:
        return self.table.nth_prime(self._floored(u))

    def find_order(self, w: int) -> int | None:
        return self.table.inverse_lookup(w)


class LinearProcess(StaticProcess):
    """Exactly linear process y = gain * floor(u), gain > 0."""

    def __init__(self, gain, input_high: int = 2**40):
        if gain <= 0:
            raise ValueError("gain must be positive")
        self.gain = gain
        self.input_high = input_high

    def evaluate(self, u: float):
        return self.gain * self._floored(u)

    def find_order(self, w) -> int | None:
        order = round(w / self.gain)
        if (
            self.input_low <= order <= self.input_high
            and self.gain * order == w
        ):
            return order
        return None


def actual_gain(table: PrimeTable, u: int) -> float:
    """Measured gain p(u)/u of the prime process."""
    return table.nth_prime(u) / u


def asymptotic_gain(u: int) -> float:
    """Leading-order gain estimate ln u, valid for u >= 2."""
    if u < 2:
        raise ProcessDomainError("asymptotic gain needs u >= 2")
    return log(u)


def refined_gain(u: int) -> float:
    """Sharper gain estimate ln u + ln ln u - 1.

    Restricted to u >= 16 so the double logarithm is positive and the
    estimate meaningful.
    """
    if u < 16:
        raise ProcessDomainError("refined gain needs u >= 16")
    ln_u = log(u)
    return ln_u + log(ln_u) - 1


def mean_actual_gain(table: PrimeTable, sample_count: int = 1000) -> float:
    """Mean of p(u)/u over evenly spaced orders, for documentation."""
    indices = _sample_orders(table.count, min(sample_count, table.count))
    return sum(actual_gain(table, u) for u in indices) / len(indices)


@dataclass(frozen=True)
class GainModel:
    """Bundle of the gain evaluators plus the average-gain constant."""

    average_gain: float = DEFAULT_AVERAGE_GAIN

    def actual(self, table: PrimeTable, u: int) -> float:
        return actual_gain(table, u)

    def asymptotic(self, u: int) -> float:
        return asymptotic_gain(u)

    def refined(self, u: int) -> float:
        return refined_gain(u)


def _sample_orders(n: int, sample_count: int) -> list[int]:
    # Evenly spaced orders over [1, n], endpoints always included.
    if sample_count < 2 or n == 1:
        return [1] * max(sample_count, 1) if n == 1 else [1, n]
    return [1 + (i * (n - 1)) // (sample_count - 1) for i in range(sample_count)]


def export_static_characteristics(
    table: PrimeTable, sample_count: int, destination: str | Path | TextIO
) -> int:
    """Write ``sample_count`` CSV rows ``u,p,K`` sampled over [1, N].

    The first row is always u = 1 and the last u = N, so the output can
    re-plot both the static characteristic p(u) and the gain curve K(u).
    Returns the number of rows written.
    """
    if sample_count < 2:
        raise ValueError("sample_count must be >= 2")
    orders = _sample_orders(table.count, sample_count)
    owned = isinstance(destination, (str, Path))
    f = open(destination, "w", newline="") if owned else destination
    try:
        writer = csv.writer(f)
        writer.writerow(["u", "p", "K"])
        for u in orders:
            p = table.nth_prime(u)
            writer.writerow([u, p, repr(p / u)])
    finally:
        if owned:
            f.close()
    return len(orders)
