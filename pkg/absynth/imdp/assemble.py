from typing import Union

import numpy as np
from abstraction import LabelSets, Partition
from scenario import IntervalTable
from scipy import sparse
from utils import get_logger
from utils.config import BOUNDARY_TOLERANCE
from utils.errors import DimensionError, FeasibilityError, LabelError

from .types import IMDP

logger = get_logger(__name__)


def _row_sums(table: IntervalTable, entries: np.ndarray) -> np.ndarray:
    running = np.concatenate([[0.0], np.cumsum(entries)])
    return running[table.indptr[1:]] - running[table.indptr[:-1]]


def validate_imdp(model: IMDP, tolerance: float = BOUNDARY_TOLERANCE):
    """
    Check shapes, labels and the feasibility of every interval row.

    Raises:
        DimensionError: Inconsistent sizes
        LabelError: Label ids outside the location range
        FeasibilityError: A row that cannot hold a distribution
    """
    L, A = model.location_count, model.action_count
    table = model.intervals

    if model.enabled.shape != (L, A):
        raise DimensionError(
            f"enabled relation has shape {model.enabled.shape}, expected {(L, A)}"
        )
    if model.horizon < 0:
        raise ValueError(f"horizon must be non-negative, got {model.horizon}")
    for name, ids in (("goal", model.labels.goal), ("unsafe", model.labels.unsafe)):
        outside = [s for s in ids if not 0 <= s < L]
        if outside:
            raise LabelError(f"{name} labels {sorted(outside)[:10]} outside [0, {L})")

    if table.interval_count:
        if table.successors.min() < 0 or table.successors.max() >= L:
            raise DimensionError("interval successors outside the location range")
        if np.any(table.lower < -tolerance) or np.any(table.upper > 1.0 + tolerance):
            raise FeasibilityError("interval bounds must lie in [0, 1]")
        bad = np.flatnonzero(table.lower > table.upper + tolerance)
        if bad.size:
            raise FeasibilityError(f"interval entry {bad[0]} has lower bound above upper")

    # Rows of actions enabled nowhere are never read
    used = np.asarray(model.enabled.sum(axis=0)).reshape(-1) > 0
    lower_sums = _row_sums(table, table.lower)
    upper_sums = _row_sums(table, table.upper)
    bad = np.flatnonzero(
        used & ((lower_sums > 1.0 + tolerance) | (upper_sums < 1.0 - tolerance))
    )
    if bad.size:
        a = int(bad[0])
        raise FeasibilityError(
            f"interval row of action {a} cannot hold a distribution "
            f"(sum lower {lower_sums[a]:.6f}, sum upper {upper_sums[a]:.6f})"
        )


def assemble_imdp(
    locations: Union[Partition, int],
    enabled,
    intervals: IntervalTable,
    labels: LabelSets,
    horizon: int,
) -> IMDP:
    """
    Put the abstraction together into a validated iMDP.

    Args:
        locations (Partition | int): The partition (sink included) or a plain location count
        enabled: Boolean (locations, actions) relation, dense or sparse
        intervals (IntervalTable): One interval row per action
        labels (LabelSets): Goal and unsafe locations
        horizon (int): Number of steps H

    Returns:
        IMDP: The validated model
    """
    location_count = (
        locations.location_count if isinstance(locations, Partition) else int(locations)
    )
    relation = sparse.csr_matrix(enabled, dtype=bool)
    relation.sort_indices()

    model = IMDP(
        location_count=location_count,
        enabled=relation,
        intervals=intervals,
        labels=labels,
        horizon=int(horizon),
    )
    validate_imdp(model)
    logger.info(
        f"Assembled iMDP: {location_count} locations, {model.action_count} actions, "
        f"{model.transition_count} transitions"
    )
    return model
