from typing import Optional

import numpy as np
from scenario import NoiseSource, binomial_lower, binomial_upper
from utils import get_logger
from utils.config import MONTE_CARLO_BETA_SIDE

from .controller import refine_control
from .types import MonteCarloReport, Outcome, ReachAvoid, RefinedController, TrajectoryRecord

logger = get_logger(__name__)


def simulate(
    ctrl: RefinedController,
    x0,
    objective: ReachAvoid,
    noise: Optional[NoiseSource],
    seed: int,
) -> TrajectoryRecord:
    """
    Run the closed loop x+ = A x + B u + eta from x0.

    At every step the goal is checked before the avoid set. The run ends at
    the first step in X_G or X_U, when the controller has no action, or after
    the horizon.

    Args:
        ctrl (RefinedController): Controller
        x0: Initial state
        objective (ReachAvoid): Continuous goal and avoid sets
        noise (Optional[NoiseSource]): Noise of the controlled system; None runs noiselessly
        seed (int): Seed of the noise stream

    Returns:
        TrajectoryRecord: States, inputs and outcome
    """
    system = ctrl.system
    rng = np.random.default_rng(seed)
    x = np.asarray(x0, dtype=float).reshape(-1)
    states, inputs = [x], []

    def finish(outcome: Outcome, goal_step: Optional[int] = None) -> TrajectoryRecord:
        return TrajectoryRecord(
            states=np.array(states),
            inputs=np.array(inputs).reshape(len(inputs), system.input_dim),
            outcome=outcome,
            seed=seed,
            first_goal_step=goal_step,
        )

    for k in range(objective.horizon + 1):
        if objective.reached(x):
            return finish(Outcome.SATISFIED, k)
        if objective.violated(x):
            return finish(Outcome.UNSAFE_HIT)
        if k == objective.horizon:
            break

        u = refine_control(ctrl, x, k)
        if u is None:
            return finish(Outcome.NO_ENABLED_ACTION)

        eta = noise.draw(rng, 1)[0] if noise is not None else None
        x = system.step(x, u, eta)
        states.append(x)
        inputs.append(u)

    return finish(Outcome.TIMEOUT)


def rate_interval(runs: int, successes: int, beta_side: float = MONTE_CARLO_BETA_SIDE):
    """Two-sided binomial bounds on a success rate."""
    return (
        binomial_lower(runs, successes, beta_side),
        binomial_upper(runs, successes, beta_side),
    )


def monte_carlo(
    ctrl: RefinedController,
    x0,
    objective: ReachAvoid,
    noise: Optional[NoiseSource],
    runs: int,
    seed: int,
    imdp_lower_bound: float = float("nan"),
) -> MonteCarloReport:
    """
    Estimate the satisfaction probability from x0 by independent simulations.

    Run i uses the sub-seed seed + i.

    Args:
        ctrl (RefinedController): Controller
        x0: Initial state
        objective (ReachAvoid): Continuous goal and avoid sets
        noise (Optional[NoiseSource]): Noise of the controlled system
        runs (int): Number of simulations M
        seed (int): Base seed
        imdp_lower_bound (float): Certified bound to report alongside

    Returns:
        MonteCarloReport: Counts, empirical rate and its 99% interval
    """
    if runs < 1:
        raise ValueError(f"need at least one run, got {runs}")

    records = [simulate(ctrl, x0, objective, noise, seed + i) for i in range(runs)]
    successes = sum(record.satisfied for record in records)
    report = MonteCarloReport(
        runs=runs,
        success_count=successes,
        rate_interval=rate_interval(runs, successes),
        imdp_lower_bound=imdp_lower_bound,
        records=records,
    )
    logger.info(
        f"Monte Carlo from {np.asarray(x0).tolist()}: {successes}/{runs} satisfied "
        f"(rate {report.empirical_rate:.4f}, certified {imdp_lower_bound:.4f})"
    )
    return report
