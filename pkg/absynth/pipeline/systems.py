from dataclasses import dataclass
from typing import Optional

import numpy as np
from dynamics import (
    LinearSystem,
    LQRWeights,
    StabilizedSystem,
    group_dynamics,
    grouped_horizon,
    make_stabilized,
    solve_dare,
)
from geometry import HalfspacePolytope
from scenario import NoiseSource, read_sample_file
from synthesis import ReachAvoid
from utils import get_logger

from .types import RunConfig

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class Systems:
    """
    The systems a run works with.

    - base: the configured system
    - effective: the grouped system the abstraction steps with
    - stabilized: its two-layer closed loop, if enabled
    - horizon: horizon in grouped steps
    """

    base: LinearSystem
    effective: LinearSystem
    stabilized: Optional[StabilizedSystem]
    horizon: int

    @property
    def abstracted(self) -> LinearSystem | StabilizedSystem:
        """The system whose backward sets define the abstraction."""
        return self.stabilized if self.stabilized is not None else self.effective


def build_noise(config: RunConfig) -> NoiseSource:
    noise = config.noise
    if noise.kind == "file":
        return NoiseSource.from_samples(
            read_sample_file(noise.path, config.system.state_dim), path=noise.path
        )
    return NoiseSource.gaussian(noise.mean, noise.covariance)


def stabilize(
    config: RunConfig,
    effective: LinearSystem,
    abstract_input_set: Optional[HalfspacePolytope] = None,
) -> StabilizedSystem:
    """
    Close the loop of the effective system with the configured gain.

    Args:
        config (RunConfig): Configuration with a two_layer gain
        effective (LinearSystem): Grouped system
        abstract_input_set: U' overriding the configured one (None keeps it)

    Returns:
        StabilizedSystem: The validated closed loop
    """
    section = config.two_layer
    if section.gain is not None:
        K = np.array(section.gain, dtype=float)
    else:
        _, K = solve_dare(effective.A, effective.B, LQRWeights(section.Q, section.R))

    if abstract_input_set is None:
        abstract_input_set = (
            section.abstract_input_set.to_polytope()
            if section.abstract_input_set
            else HalfspacePolytope.unconstrained(effective.input_dim)
        )
    return make_stabilized(effective, K, abstract_input_set, config.partition.domain)


def build_systems(config: RunConfig) -> Systems:
    """
    Build and validate the base, grouped and (optionally) stabilized systems.

    Raises:
        AssumptionError: If A is singular, (A, B) is uncontrollable, the gain
            is inadmissible or U' misses the origin
    """
    base = LinearSystem(
        A=config.system.A,
        B=config.system.B,
        input_set=config.input_set.to_polytope(),
        noise_source=build_noise(config),
    )
    effective = group_dynamics(base, config.grouping)
    stabilized = stabilize(config, effective) if config.two_layer.enabled else None
    return Systems(
        base=base,
        effective=effective,
        stabilized=stabilized,
        horizon=grouped_horizon(config.property.horizon, config.grouping),
    )


def build_objective(config: RunConfig, horizon: int) -> ReachAvoid:
    return ReachAvoid(
        goal=tuple(config.property.goal_boxes),
        avoid=tuple(config.property.avoid_boxes),
        domain=config.partition.domain,
        avoid_complement=config.property.avoid_complement,
        horizon=horizon,
    )
