from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True, eq=False)
class Policy:
    """
    Deterministic time-varying policy.

    - actions: (H, locations) action ids indexed by time step k; -1 where undefined
    """

    actions: np.ndarray

    @property
    def horizon(self) -> int:
        return self.actions.shape[0]

    @property
    def location_count(self) -> int:
        return self.actions.shape[1]

    def action(self, location: int, k: int) -> Optional[int]:
        """
        Action at a location and time step.

        Args:
            location (int): Location id
            k (int): Time step in [0, H)

        Returns:
            Optional[int]: Action id, or None where the policy is undefined
        """
        chosen = int(self.actions[k, location])
        return None if chosen < 0 else chosen

    def defined(self) -> list[tuple[int, int, int]]:
        """(location, k, action) triples where the policy is defined, sorted by (location, k)."""
        ks, locations = np.nonzero(self.actions >= 0)
        triples = [
            (int(s), int(k), int(self.actions[k, s])) for k, s in zip(ks, locations)
        ]
        return sorted(triples)
