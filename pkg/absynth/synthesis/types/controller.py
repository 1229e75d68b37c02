from dataclasses import dataclass
from typing import Optional

import numpy as np
from abstraction import Partition
from dynamics import LinearSystem, StabilizedSystem
from imdp import Policy


@dataclass(frozen=True, eq=False)
class RefinedController:
    """
    Piecewise-affine feedback law refined from an iMDP policy.

    - policy: the iMDP policy, indexed by (location, k)
    - partition: the partition used to locate states
    - targets: (actions, n) target points d_a
    - system: the (possibly grouped) system the abstraction was built for
    - B_inv: inverse of the system's square input matrix
    - stabilized: the closed loop in two-layer mode, None in single-layer mode
    """

    policy: Policy
    partition: Partition
    targets: np.ndarray
    system: LinearSystem
    B_inv: np.ndarray
    stabilized: Optional[StabilizedSystem] = None

    @property
    def mode(self) -> str:
        return "single-layer" if self.stabilized is None else "two-layer"

    @property
    def horizon(self) -> int:
        return self.policy.horizon
