"""Incremental integral control law, antiwindup clamp, and tunings.

The controller is pure I: each step adds e(k)/T_i to a real-valued state
that is clamped to the valid order range (antiwindup). The proportion
variant replaces the additive update with u * w / y, which is exact in one
step on a purely linear process. Steps are pure functions of (state,
inputs), so independent searches can share nothing.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class Mode(str, enum.Enum):
    INTEGRAL = "integral"
    PROPORTION = "proportion"


class Tuning(str, enum.Enum):
    BALANCED = "balanced"  # T_i = K, the process gain
    LOGARITHMIC = "logarithmic"  # T_i = ln w, slightly over-damped
    EXPLICIT = "explicit"  # T_i supplied by the caller


@dataclass(frozen=True)
class ControllerConfig:
    """Controller settings for one search.

    ``ti`` may stay None for the balanced/logarithmic tunings until
    resolved before a run; ``clamp_high`` may stay None to be resolved to
    the process input range. ``kc`` is pinned to 1.
    """

    mode: Mode = Mode.INTEGRAL
    tuning: Tuning = Tuning.LOGARITHMIC
    ti: float | None = None
    kc: float = 1.0
    clamp_low: float = 1.0
    clamp_high: float | None = None
    max_steps: int = 100

    def __post_init__(self):
        if self.kc != 1.0:
            raise ValueError("kc is pinned to 1")
        if self.ti is not None and not self.ti > 0:
            raise ValueError("ti must be positive")
        if self.tuning is Tuning.EXPLICIT and self.ti is None:
            raise ValueError("explicit tuning requires ti")
        if self.clamp_low != 1.0:
            raise ValueError("clamp_low is pinned to 1")
        if self.clamp_high is not None and self.clamp_high < self.clamp_low:
            raise ValueError("clamp_high must be >= clamp_low")
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")


@dataclass(frozen=True)
class ControllerState:
    """Real-valued controller output u and the update counter k."""

    u: float
    k: int = 0


@dataclass(frozen=True)
class StepRecord:
    """One process evaluation: state, floored input, output, error."""

    k: int
    u_real: float
    u_floored: int
    y: int | float
    e: int | float


def tune_balanced(gain: float) -> float:
    """Balanced tuning T_i = K for a positive process gain K."""
    if not gain > 0:
        raise ValueError("gain must be positive")
    return float(gain)


def tune_logarithmic(w: int) -> float:
    """Logarithmic tuning T_i = ln w for a set-point w >= 2."""
    if w < 2:
        raise ValueError("set-point must be >= 2")
    return math.log(w)


def clamp_antiwindup(u: float, config: ControllerConfig) -> float:
    """Clamp u into [clamp_low, clamp_high]; idempotent."""
    high = config.clamp_high
    if high is None:
        raise ValueError("clamp_high is unresolved")
    return min(max(u, config.clamp_low), high)


def integral_step(
    state: ControllerState, e: float, config: ControllerConfig
) -> ControllerState:
    """One incremental I update: u' = clamp(u + (kc/ti) * e).

    The error is divided by ti (rather than multiplied by a reciprocal)
    so that integer-exact quotients stay exact: on a purely linear
    process with ti matched to the gain, one update lands on the target
    with no rounding residue.
    """
    if config.ti is None:
        raise ValueError("ti is unresolved")
    u = clamp_antiwindup(state.u + (config.kc * e) / config.ti, config)
    return ControllerState(u=u, k=state.k + 1)


def proportion_step(
    state: ControllerState, w: int, y, config: ControllerConfig
) -> ControllerState:
    """One proportion update: u' = clamp(u * w / y), requires y > 0.

    Computed as (u * w) / y so integer-exact cases (linear process with
    integer gain) floor without rounding surprises.
    """
    if not y > 0:
        raise ValueError("process output must be positive")
    u = clamp_antiwindup((state.u * w) / y, config)
    return ControllerState(u=u, k=state.k + 1)
