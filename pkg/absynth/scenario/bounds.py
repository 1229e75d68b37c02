import math
from functools import lru_cache

import numpy as np
from scipy.stats import binom
from utils.config import BISECTION_TOLERANCE


def _check_arguments(N: int, inside: int, beta_side: float):
    if N < 1:
        raise ValueError(f"sample count must be positive, got {N}")
    if not 0 <= inside <= N:
        raise ValueError(f"inside count {inside} outside [0, {N}]")
    if not 0.0 < beta_side < 1.0:
        raise ValueError(f"confidence parameter must lie in (0, 1), got {beta_side}")


@lru_cache(maxsize=32)
def bound_table(N: int, beta_side: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Lower and upper probability bounds for every inside-count 0..N at once.

    For count c the lower bound solves P[Bin(N, p) >= c] = beta_side and the
    upper bound solves P[Bin(N, p) <= c] = beta_side; both are found by
    bisection on [0, 1] to 1e-9, with binomial tails evaluated by scipy.
    The lower bound is the left end of the final bracket and the upper bound
    the right end.

    Args:
        N (int): Number of samples
        beta_side (float): Confidence parameter of each side

    Returns:
        tuple[np.ndarray, np.ndarray]: (lower, upper), each of shape (N + 1,)
    """
    _check_arguments(N, 0, beta_side)
    counts = np.arange(N + 1)
    iterations = math.ceil(math.log2(1.0 / BISECTION_TOLERANCE))

    # Lower bound: P[X >= c] grows with p
    low, high = np.zeros(N + 1), np.ones(N + 1)
    for _ in range(iterations):
        middle = (low + high) / 2.0
        below = binom.sf(counts - 1, N, middle) < beta_side
        low = np.where(below, middle, low)
        high = np.where(below, high, middle)
    lower = low
    lower[0] = 0.0

    # Upper bound: P[X <= c] shrinks with p
    low, high = np.zeros(N + 1), np.ones(N + 1)
    for _ in range(iterations):
        middle = (low + high) / 2.0
        above = binom.cdf(counts, N, middle) > beta_side
        low = np.where(above, middle, low)
        high = np.where(above, high, middle)
    upper = high
    upper[N] = 1.0

    lower.setflags(write=False)
    upper.setflags(write=False)
    return lower, upper


def binomial_lower(N: int, inside: int, beta_side: float) -> float:
    """
    PAC lower bound on a probability from `inside` of N samples.

    Args:
        N (int): Number of samples
        inside (int): Samples inside the event
        beta_side (float): Confidence parameter of this side

    Returns:
        float: 0 when no sample is inside, else the root of the upper binomial tail
    """
    _check_arguments(N, inside, beta_side)
    return float(bound_table(N, beta_side)[0][inside])


def binomial_upper(N: int, inside: int, beta_side: float) -> float:
    """
    PAC upper bound on a probability from `inside` of N samples.

    Args:
        N (int): Number of samples
        inside (int): Samples inside the event
        beta_side (float): Confidence parameter of this side

    Returns:
        float: 1 when every sample is inside, else the root of the lower binomial tail
    """
    _check_arguments(N, inside, beta_side)
    return float(bound_table(N, beta_side)[1][inside])


def confidence_budget(overall: float, action_count: int, location_count: int) -> float:
    """
    Split an overall confidence over every (action, location) interval.

    Args:
        overall (float): Desired overall confidence in (0, 1)
        action_count (int): |A|
        location_count (int): |S|

    Returns:
        float: beta such that 1 - beta |A| |S| = overall
    """
    if not 0.0 < overall < 1.0:
        raise ValueError(f"overall confidence must lie in (0, 1), got {overall}")
    if action_count < 1 or location_count < 1:
        raise ValueError("action and location counts must be positive")
    return (1.0 - overall) / (action_count * location_count)
