from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np


class Outcome(str, Enum):
    SATISFIED = "satisfied"
    UNSAFE_HIT = "unsafe-hit"
    TIMEOUT = "timeout"
    NO_ENABLED_ACTION = "no-enabled-action"


@dataclass(frozen=True, eq=False)
class TrajectoryRecord:
    """
    One closed-loop simulation.

    - states: (steps + 1, n) visited states x_0, x_1, ...
    - inputs: (steps, p) applied inputs
    - outcome: how the run ended
    - first_goal_step: step at which X_G was reached, if it was
    - seed: seed of the noise stream
    """

    states: np.ndarray
    inputs: np.ndarray
    outcome: Outcome
    seed: int
    first_goal_step: Optional[int] = None

    @property
    def satisfied(self) -> bool:
        return self.outcome is Outcome.SATISFIED

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "outcome": self.outcome.value,
            "first_goal_step": self.first_goal_step,
            "steps": len(self.inputs),
        }


@dataclass(frozen=True, eq=False)
class MonteCarloReport:
    """
    Aggregate of M independent simulations.

    - runs: M
    - success_count: satisfied runs
    - rate_interval: two-sided 99% binomial bounds on the satisfaction rate
    - imdp_lower_bound: certified bound of the initial location
    - records: every simulation, in sub-seed order
    """

    runs: int
    success_count: int
    rate_interval: tuple[float, float]
    imdp_lower_bound: float
    records: list[TrajectoryRecord] = field(default_factory=list)

    @property
    def empirical_rate(self) -> float:
        return self.success_count / self.runs

    def to_dict(self) -> dict:
        return {
            "runs": self.runs,
            "success_count": self.success_count,
            "empirical_rate": self.empirical_rate,
            "rate_low": self.rate_interval[0],
            "rate_high": self.rate_interval[1],
            "imdp_lower_bound": self.imdp_lower_bound,
        }
