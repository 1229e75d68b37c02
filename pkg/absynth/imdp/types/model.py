from dataclasses import dataclass

import numpy as np
from abstraction import LabelSets
from scenario import IntervalTable
from scipy import sparse


@dataclass(frozen=True, eq=False)
class IMDP:
    """
    Interval Markov decision process with a reach-avoid labeling.

    - location_count: number of locations, sink included
    - enabled: boolean (locations, actions) relation
    - intervals: one interval row per action, shared by every location enabling it
    - labels: goal and unsafe locations; unsafe locations are absorbing
    - horizon: number of steps H
    """

    location_count: int
    enabled: sparse.csr_matrix
    intervals: IntervalTable
    labels: LabelSets
    horizon: int

    @property
    def action_count(self) -> int:
        return self.intervals.action_count

    def actions_at(self, location: int) -> list[int]:
        start, end = self.enabled.indptr[location], self.enabled.indptr[location + 1]
        return sorted(int(a) for a in self.enabled.indices[start:end])

    @property
    def transition_count(self) -> int:
        """Number of (s, a in A(s), s') triples with a positive upper bound."""
        per_action = self.intervals.nonzero_counts()
        return int(np.asarray(self.enabled.astype(np.int64) @ per_action).sum())

    def label_array(self) -> tuple[np.ndarray, np.ndarray]:
        """Boolean goal and unsafe masks over locations."""
        goal = np.zeros(self.location_count, dtype=bool)
        unsafe = np.zeros(self.location_count, dtype=bool)
        goal[np.fromiter(self.labels.goal, dtype=np.int64)] = True
        unsafe[np.fromiter(self.labels.unsafe, dtype=np.int64)] = True
        return goal, unsafe
