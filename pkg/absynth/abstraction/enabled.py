import numpy as np
from geometry import HalfspacePolytope, rect_support
from scipy import sparse
from utils import get_logger
from utils.config import BOUNDARY_TOLERANCE
from utils.errors import DimensionError

from .types import ActionSet, Partition

logger = get_logger(__name__)


def enabled_actions(
    partition: Partition, backward_sets: list[HalfspacePolytope]
) -> sparse.csr_matrix:
    """
    Enable action a at region s iff the region lies inside a's backward set.

    Containment is tested through the support of every halfspace over each
    region, which equals the 2^n-vertex test. Actions that share a constraint
    matrix (all of them, for a fixed system) share one support computation.

    Args:
        partition (Partition): The partition
        backward_sets (list[HalfspacePolytope]): Backward set per action

    Returns:
        sparse.csr_matrix: Boolean (locations, actions) relation; the sink row is empty
    """
    lower, upper = partition.bounds
    enabled = np.zeros((partition.location_count, len(backward_sets)), dtype=bool)
    support_cache: dict[bytes, np.ndarray] = {}

    for action, polytope in enumerate(backward_sets):
        if polytope.dimension != partition.dimension:
            raise DimensionError(
                f"backward set {action} has dimension {polytope.dimension}, "
                f"partition has {partition.dimension}"
            )
        if polytope.row_count == 0:
            enabled[: partition.region_count, action] = True
            continue

        key = polytope.constraint_matrix.tobytes()
        support = support_cache.get(key)
        if support is None:
            support = rect_support(lower, upper, polytope)
            support_cache[key] = support

        enabled[: partition.region_count, action] = np.all(
            support <= polytope.offset + BOUNDARY_TOLERANCE, axis=1
        )

    relation = sparse.csr_matrix(enabled)
    logger.info(
        f"Enabled {relation.nnz} (location, action) pairs over "
        f"{len(backward_sets)} actions"
    )
    return relation


def build_action_set(
    partition: Partition, targets, backward_sets: list[HalfspacePolytope]
) -> ActionSet:
    """Bundle targets, backward sets and the enabled relation."""
    return ActionSet(
        targets=np.asarray(targets, dtype=float),
        backward_sets=list(backward_sets),
        enabled=enabled_actions(partition, backward_sets),
    )
