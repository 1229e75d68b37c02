from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from abstraction import Partition
from dynamics import StabilizedSystem
from imdp import IMDP, Policy, ValueTable
from synthesis import MonteCarloReport

from .run_config import RunConfig

CERTIFIED = "certified"
UNKNOWN = "unknown"


@dataclass(eq=False)
class RunReport:
    """
    Everything a pipeline run produces.

    - config: the run document
    - partition, model, values, policy: the abstraction and its solution
    - initial_locations: location of every configured initial state
    - beta: confidence budget of each interval
    - noise_description, sample_seed: provenance of the noise samples
    - timings: wall-clock seconds per stage
    - monte_carlo: one report per initial state (empty when simulation is off)
    - stabilized: the closed loop in two-layer mode
    """

    config: RunConfig
    partition: Partition
    model: IMDP
    values: ValueTable
    policy: Policy
    initial_locations: list[int]
    beta: float
    noise_description: str
    sample_seed: Optional[int]
    timings: dict[str, float] = field(default_factory=dict)
    monte_carlo: list[MonteCarloReport] = field(default_factory=list)
    stabilized: Optional[StabilizedSystem] = None

    @property
    def transition_count(self) -> int:
        return self.model.transition_count

    @property
    def initial_bounds(self) -> list[float]:
        return [self.values.lower_bound(s) for s in self.initial_locations]

    @property
    def verdict(self) -> str:
        """'certified' iff every initial location meets the threshold."""
        bounds = self.initial_bounds
        if bounds and min(bounds) >= self.config.property.threshold:
            return CERTIFIED
        return UNKNOWN

    @property
    def bounds(self) -> np.ndarray:
        return self.values.bounds
