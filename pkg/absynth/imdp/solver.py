import numpy as np
from utils import get_logger
from utils.config import BOUNDARY_TOLERANCE
from utils.errors import DimensionError, FeasibilityError

from .kernels import bellman_max, expected_all, worst_case_all, worst_case_row
from .types import IMDP, Policy, ValueTable

logger = get_logger(__name__)


def check_row(lower, upper, tolerance: float = BOUNDARY_TOLERANCE):
    """Raise FeasibilityError unless the interval row holds a distribution."""
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    if lower.shape != upper.shape:
        raise DimensionError(f"lower {lower.shape} and upper {upper.shape} differ in shape")
    if np.any(lower < -tolerance) or np.any(upper > 1.0 + tolerance):
        raise FeasibilityError("interval bounds must lie in [0, 1]")
    if np.any(lower > upper + tolerance):
        raise FeasibilityError("an interval has lower bound above its upper bound")
    if lower.sum() > 1.0 + tolerance or upper.sum() < 1.0 - tolerance:
        raise FeasibilityError(
            f"no distribution fits the row (sum lower {lower.sum():.6f}, "
            f"sum upper {upper.sum():.6f})"
        )


def inner_min_expectation(values, lower, upper, successors=None):
    """
    Worst-case expectation of `values` over an interval row.

    The adversary starts from the lower bounds and gives the remaining mass
    to successors in ascending value order (ties by ascending successor id),
    each up to its upper bound.

    Args:
        values: Value of each successor, aligned with the bounds
        lower: Lower bounds
        upper: Upper bounds
        successors: Successor ids used for tie-breaking (defaults to 0..k-1)

    Returns:
        tuple[float, np.ndarray]: The worst value and the distribution attaining it
    """
    values = np.asarray(values, dtype=float)
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    check_row(lower, upper)
    if values.shape != lower.shape:
        raise DimensionError(f"{values.shape[0]} values for {lower.shape[0]} intervals")
    if successors is None:
        successors = np.arange(values.shape[0])
    successors = np.asarray(successors, dtype=np.int64)

    value, distribution = worst_case_row(values, successors, lower, upper)
    return float(value), distribution


def _backup(model: IMDP, action_values: np.ndarray, goal, unsafe):
    best, chosen = bellman_max(
        model.enabled.indptr.astype(np.int64),
        model.enabled.indices.astype(np.int64),
        action_values,
    )
    best[goal] = 1.0
    best[unsafe] = 0.0
    chosen[goal | unsafe] = -1
    return best, chosen


def robust_value_iteration(model: IMDP) -> tuple[ValueTable, Policy]:
    """
    Robust finite-horizon reach-avoid value iteration.

    Each time-to-go layer reads only the previous one. Every action's
    worst-case expectation is computed once per layer since its interval row
    does not depend on the location enabling it.

    Args:
        model (IMDP): A validated iMDP

    Returns:
        tuple[ValueTable, Policy]: Values V[0..H] and the maximizing policy
    """
    H, L = model.horizon, model.location_count
    goal, unsafe = model.label_array()
    table = model.intervals

    values = np.zeros((H + 1, L))
    values[0, goal] = 1.0
    actions = np.full((H, L), -1, dtype=np.int64)

    for t in range(1, H + 1):
        action_values = worst_case_all(
            values[t - 1], table.indptr, table.successors, table.lower, table.upper
        )
        values[t], actions[H - t] = _backup(model, action_values, goal, unsafe)

    logger.info(
        f"Robust value iteration over {L} locations, H={H}: "
        f"max bound {values[H].max():.4f}"
    )
    return ValueTable(values), Policy(actions)


def point_mdp_value_iteration(model: IMDP, probabilities) -> tuple[ValueTable, Policy]:
    """
    Standard value iteration with one fixed distribution per action.

    Args:
        model (IMDP): The iMDP whose structure is reused
        probabilities: Distribution aligned with model.intervals.successors

    Returns:
        tuple[ValueTable, Policy]: Values and the maximizing policy of the point MDP
    """
    table = model.intervals
    probabilities = np.asarray(probabilities, dtype=float)
    if probabilities.shape != table.successors.shape:
        raise DimensionError(
            f"{probabilities.shape[0]} probabilities for {table.interval_count} intervals"
        )

    H, L = model.horizon, model.location_count
    goal, unsafe = model.label_array()
    values = np.zeros((H + 1, L))
    values[0, goal] = 1.0
    actions = np.full((H, L), -1, dtype=np.int64)

    for t in range(1, H + 1):
        action_values = expected_all(
            values[t - 1], table.indptr, table.successors, probabilities
        )
        values[t], actions[H - t] = _backup(model, action_values, goal, unsafe)

    return ValueTable(values), Policy(actions)
