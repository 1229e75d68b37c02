import numpy as np
from geometry import HyperRectangle
from utils import get_logger
from utils.errors import DimensionError, GeometryError

from .types import Partition

logger = get_logger(__name__)


def build_partition(domain: HyperRectangle, counts) -> Partition:
    """
    Tile a box into equally sized rectangular regions.

    Args:
        domain (HyperRectangle): The state region X
        counts: Number of regions per dimension

    Returns:
        Partition: Row-major numbered regions plus a sink location
    """
    counts = tuple(int(c) for c in counts)
    if len(counts) != domain.dimension:
        raise DimensionError(
            f"{len(counts)} region counts for a {domain.dimension}-dimensional domain"
        )
    if any(c < 1 for c in counts):
        raise GeometryError(f"region counts must be positive, got {list(counts)}")
    if np.any(domain.width <= 0.0):
        raise GeometryError("the partitioned domain must have positive width in every dimension")

    partition = Partition(domain=domain, counts=counts)
    logger.info(
        f"Partitioned X into {partition.region_count} regions "
        f"(counts {list(counts)}, widths {partition.width.tolist()}) plus a sink"
    )
    return partition


def locate(partition: Partition, x) -> int:
    """
    Map a state to its location.

    Points on a shared face go to the region above it (floor rule); points on
    the upper face of X go to the last region.

    Args:
        partition (Partition): The partition
        x: State vector

    Returns:
        int: Region id, or the sink id if x lies outside X
    """
    x = np.asarray(x, dtype=float).reshape(1, -1)
    return int(locate_many(partition, x)[0])


def locate_many(partition: Partition, points) -> np.ndarray:
    """
    Vectorized locate over the rows of `points`.

    Returns:
        np.ndarray: Location id per point
    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != partition.dimension:
        raise DimensionError(
            f"points of shape {points.shape} do not match dimension {partition.dimension}"
        )

    domain = partition.domain
    outside = np.any((points < domain.lower) | (points > domain.upper), axis=1)

    index = np.floor((points - domain.lower) / partition.width).astype(np.int64)
    index = np.clip(index, 0, np.asarray(partition.counts) - 1)
    ids = np.ravel_multi_index(tuple(index.T), partition.counts)

    return np.where(outside, partition.sink_id, ids)


def action_targets(partition: Partition) -> np.ndarray:
    """Target points d_a: the centre of every non-sink region, in region order."""
    return np.array(partition.centers, dtype=float)
