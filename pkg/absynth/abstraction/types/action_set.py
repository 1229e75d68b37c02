from dataclasses import dataclass

import numpy as np
from geometry import HalfspacePolytope
from scipy import sparse


@dataclass(frozen=True, eq=False)
class ActionSet:
    """
    Abstract actions of the iMDP.

    - targets: (actions, n) target points d_a, one per non-sink region
    - backward_sets: backward reachable set of every action
    - enabled: sparse boolean (locations, actions) relation, row s holds A(s)
    """

    targets: np.ndarray
    backward_sets: list[HalfspacePolytope]
    enabled: sparse.csr_matrix

    def __post_init__(self):
        if len(self.targets) != len(self.backward_sets):
            raise ValueError(
                f"{len(self.targets)} targets but {len(self.backward_sets)} backward sets"
            )

    @property
    def action_count(self) -> int:
        return len(self.targets)

    def actions_at(self, location: int) -> list[int]:
        """Enabled action ids at a location, ascending."""
        start, end = self.enabled.indptr[location], self.enabled.indptr[location + 1]
        return sorted(int(a) for a in self.enabled.indices[start:end])

    def enabled_pair_count(self) -> int:
        return int(self.enabled.nnz)
