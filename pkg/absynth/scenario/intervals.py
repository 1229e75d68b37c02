import numpy as np
from abstraction import Partition, locate_many
from utils import get_logger
from utils.errors import DimensionError, FeasibilityError

from .bounds import bound_table
from .types import IntervalTable, SampleSet

logger = get_logger(__name__)


def count_successors(target, samples: SampleSet, partition: Partition) -> np.ndarray:
    """
    Count in which location each noisy successor d_a + delta_i lands.

    Args:
        target: Target point d_a
        samples (SampleSet): Noise samples
        partition (Partition): The partition

    Returns:
        np.ndarray: Sample count per location id (sink included); sums to N
    """
    target = np.asarray(target, dtype=float).reshape(-1)
    if target.shape[0] != samples.dimension:
        raise DimensionError(
            f"target has dimension {target.shape[0]}, samples have {samples.dimension}"
        )
    locations = locate_many(partition, target + samples.samples)
    return np.bincount(locations, minlength=partition.location_count)


def interval_row(counts: np.ndarray, sink_id: int, lower_table, upper_table):
    """
    Interval entries of one action from its successor counts.

    Regions without samples get no entry; their mass is folded into the sink
    entry, which is always present.

    Returns:
        tuple[np.ndarray, np.ndarray, np.ndarray]: successors, lower, upper
    """
    N = int(counts.sum())
    regions = np.flatnonzero(counts[:sink_id] > 0)
    sink_count = N - int(counts[regions].sum())
    successors = np.append(regions, sink_id)
    inside = np.append(counts[regions], sink_count)
    return successors, lower_table[inside], upper_table[inside]


def build_interval_table(
    targets, samples: SampleSet, partition: Partition, beta: float
) -> IntervalTable:
    """
    PAC transition-probability intervals for every action.

    Each side of every interval gets confidence 1 - beta / (2N). The row of
    action a only depends on a because the successor distribution is d_a + eta
    from every state where a is enabled.

    Args:
        targets: (actions, n) target points
        samples (SampleSet): Shared noise samples
        partition (Partition): The partition
        beta (float): Confidence budget per interval

    Returns:
        IntervalTable: One sparse row per action
    """
    N = samples.N
    lower_table, upper_table = bound_table(N, beta / (2.0 * N))

    indptr = [0]
    successors, lower, upper = [], [], []
    for action, target in enumerate(targets):
        counts = count_successors(target, samples, partition)
        row_successors, row_lower, row_upper = interval_row(
            counts, partition.sink_id, lower_table, upper_table
        )

        if row_lower.sum() > 1.0 or row_upper.sum() < 1.0:
            raise FeasibilityError(
                f"interval row of action {action} cannot hold a distribution "
                f"(sum lower {row_lower.sum():.6f}, sum upper {row_upper.sum():.6f})"
            )

        successors.append(row_successors)
        lower.append(row_lower)
        upper.append(row_upper)
        indptr.append(indptr[-1] + row_successors.shape[0])

        if action % 500 == 0:
            logger.debug(f"Action {action}: {row_successors.shape[0]} successor intervals")

    table = IntervalTable(
        indptr=np.array(indptr),
        successors=np.concatenate(successors) if successors else np.zeros(0, dtype=np.int64),
        lower=np.concatenate(lower) if lower else np.zeros(0),
        upper=np.concatenate(upper) if upper else np.zeros(0),
        beta_per_interval=beta,
        sample_count=N,
    )
    logger.info(
        f"Built {table.interval_count} intervals for {table.action_count} actions "
        f"(N={N}, beta={beta:.3e})"
    )
    return table
