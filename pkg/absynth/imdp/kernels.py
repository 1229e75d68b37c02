import numba as nb
import numpy as np

kwd = {"cache": True}


@nb.njit(**kwd)
def _worst_case_order(values, successors):
    # Ascending value, ties by ascending successor id
    by_id = np.argsort(successors, kind="mergesort")
    return by_id[np.argsort(values[by_id], kind="mergesort")]


@nb.njit(**kwd)
def worst_case_row(values, successors, lower, upper):
    """
    Greedy adversary for one interval row.

    Starts from the lower bounds and hands the remaining mass to successors
    in ascending value order, each up to its upper bound.

    Returns (expected value, distribution aligned with `successors`).
    """
    probabilities = lower.copy()
    slack = 1.0 - probabilities.sum()
    for i in _worst_case_order(values, successors):
        if slack <= 0.0:
            break
        added = min(slack, upper[i] - lower[i])
        probabilities[i] += added
        slack -= added
    return (probabilities * values).sum(), probabilities


@nb.njit(**kwd)
def worst_case_all(location_values, indptr, successors, lower, upper):
    """Worst-case expected value of every action row against `location_values`."""
    action_count = indptr.shape[0] - 1
    result = np.zeros(action_count)
    for a in range(action_count):
        start, end = indptr[a], indptr[a + 1]
        if start == end:
            continue
        row_successors = successors[start:end]
        value, _ = worst_case_row(
            location_values[row_successors], row_successors, lower[start:end], upper[start:end]
        )
        result[a] = value
    return result


@nb.njit(**kwd)
def expected_all(location_values, indptr, successors, probabilities):
    """Expected value of every action row under fixed distributions."""
    action_count = indptr.shape[0] - 1
    result = np.zeros(action_count)
    for a in range(action_count):
        for j in range(indptr[a], indptr[a + 1]):
            result[a] += probabilities[j] * location_values[successors[j]]
    return result


@nb.njit(**kwd)
def bellman_max(enabled_indptr, enabled_indices, action_values):
    """
    Best action value per location over a CSR enabled relation.

    Ties go to the lowest action id; locations without actions get value 0
    and action -1.
    """
    location_count = enabled_indptr.shape[0] - 1
    best = np.zeros(location_count)
    chosen = np.full(location_count, -1, dtype=np.int64)
    for s in range(location_count):
        for j in range(enabled_indptr[s], enabled_indptr[s + 1]):
            a = enabled_indices[j]
            value = action_values[a]
            if chosen[s] < 0 or value > best[s] or (value == best[s] and a < chosen[s]):
                best[s] = value
                chosen[s] = a
    return best, chosen
