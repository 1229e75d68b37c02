import numpy as np
from geometry import HyperRectangle
from utils import get_logger
from utils.config import BOUNDARY_TOLERANCE
from utils.errors import DimensionError, LabelError

from .types import LabelSets, Partition

logger = get_logger(__name__)


def label_locations(
    partition: Partition,
    goal_boxes: list[HyperRectangle],
    avoid_boxes: list[HyperRectangle],
    avoid_complement: bool,
) -> LabelSets:
    """
    Label locations as goal (region inside a goal box) or unsafe (region
    overlapping an avoid box with positive measure, or the sink when the
    complement of X is to be avoided).

    Args:
        partition (Partition): The partition
        goal_boxes (list[HyperRectangle]): Union of boxes forming X_G
        avoid_boxes (list[HyperRectangle]): Union of boxes forming X_U inside X
        avoid_complement (bool): Whether R^n \\ X is unsafe

    Returns:
        LabelSets: Disjoint goal and unsafe location ids
    """
    lower, upper = partition.bounds
    goal = np.zeros(partition.region_count, dtype=bool)
    unsafe = np.zeros(partition.region_count, dtype=bool)

    for box in list(goal_boxes) + list(avoid_boxes):
        if box.dimension != partition.dimension:
            raise DimensionError(
                f"box of dimension {box.dimension} in a {partition.dimension}-dimensional partition"
            )

    for box in goal_boxes:
        goal |= np.all(lower >= box.lower - BOUNDARY_TOLERANCE, axis=1) & np.all(
            upper <= box.upper + BOUNDARY_TOLERANCE, axis=1
        )

    for box in avoid_boxes:
        overlap_low = np.maximum(lower, box.lower)
        overlap_high = np.minimum(upper, box.upper)
        unsafe |= np.all(overlap_low < overlap_high, axis=1)

    both = np.flatnonzero(goal & unsafe)
    if both.size:
        raise LabelError(
            f"regions {both[:10].tolist()} are both inside a goal box and touching an avoid box"
        )

    goal_ids = set(np.flatnonzero(goal).tolist())
    unsafe_ids = set(np.flatnonzero(unsafe).tolist())
    if avoid_complement:
        unsafe_ids.add(partition.sink_id)

    logger.info(f"Labeled {len(goal_ids)} goal and {len(unsafe_ids)} unsafe locations")
    return LabelSets(goal=frozenset(goal_ids), unsafe=frozenset(unsafe_ids))
