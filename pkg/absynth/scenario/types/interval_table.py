from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True, eq=False)
class IntervalTable:
    """
    Sparse transition-probability intervals, one row per action.

    Row a spans indptr[a]:indptr[a + 1] of the successor/lower/upper arrays;
    successors are sorted ascending and the sink is always present.

    - indptr: (actions + 1,) row offsets
    - successors: location id per entry
    - lower, upper: interval bounds per entry
    - beta_per_interval: confidence budget of each interval (None when unknown)
    - sample_count: N used for the bounds (None when unknown)
    """

    indptr: np.ndarray
    successors: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    beta_per_interval: Optional[float] = None
    sample_count: Optional[int] = None

    def __post_init__(self):
        for name, dtype in (
            ("indptr", np.int64),
            ("successors", np.int64),
            ("lower", float),
            ("upper", float),
        ):
            array = np.ascontiguousarray(getattr(self, name), dtype=dtype)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @property
    def action_count(self) -> int:
        return self.indptr.shape[0] - 1

    @property
    def interval_count(self) -> int:
        return int(self.successors.shape[0])

    def row_slice(self, action: int) -> slice:
        return slice(int(self.indptr[action]), int(self.indptr[action + 1]))

    def row(self, action: int) -> dict[int, tuple[float, float]]:
        """
        Get the interval row of an action.

        Args:
            action (int): Action id

        Returns:
            dict[int, tuple[float, float]]: successor id -> (lower, upper)
        """
        span = self.row_slice(action)
        return {
            int(s): (float(lo), float(hi))
            for s, lo, hi in zip(self.successors[span], self.lower[span], self.upper[span])
        }

    def nonzero_counts(self) -> np.ndarray:
        """Number of entries with a positive upper bound, per action."""
        positive = np.concatenate([[0], np.cumsum(self.upper > 0.0)])
        return positive[self.indptr[1:]] - positive[self.indptr[:-1]]

    @classmethod
    def from_rows(
        cls,
        rows: list[dict[int, tuple[float, float]]],
        beta_per_interval: Optional[float] = None,
        sample_count: Optional[int] = None,
    ) -> "IntervalTable":
        """Build a table from per-action {successor: (lower, upper)} rows."""
        indptr = [0]
        successors, lower, upper = [], [], []
        for row in rows:
            for successor in sorted(row):
                lo, hi = row[successor]
                successors.append(successor)
                lower.append(lo)
                upper.append(hi)
            indptr.append(len(successors))
        return cls(
            indptr=np.array(indptr),
            successors=np.array(successors, dtype=np.int64),
            lower=np.array(lower, dtype=float),
            upper=np.array(upper, dtype=float),
            beta_per_interval=beta_per_interval,
            sample_count=sample_count,
        )
