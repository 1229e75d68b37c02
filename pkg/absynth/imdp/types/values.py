from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class ValueTable:
    """
    Robust reach-avoid values V[t][s] for time-to-go t = 0..H.
    """

    values: np.ndarray

    @property
    def horizon(self) -> int:
        return self.values.shape[0] - 1

    def lower_bound(self, location: int) -> float:
        """Guaranteed satisfaction probability from `location` over the full horizon."""
        return float(self.values[-1, location])

    @property
    def bounds(self) -> np.ndarray:
        return self.values[-1]
