from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

import numpy as np
from geometry import HalfspacePolytope
from utils.config import RANK_TOLERANCE
from utils.errors import AssumptionError, DimensionError

if TYPE_CHECKING:
    from scenario.types import NoiseSource


def _as_matrix(value) -> np.ndarray:
    matrix = np.array(value, dtype=float, ndmin=2)
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True, eq=False)
class LinearSystem:
    """
    Discrete-time stochastic linear system x+ = A x + B u + eta.

    - A: (n, n) state matrix, non-singular
    - B: (n, p) input matrix, (A, B) controllable
    - input_set: polytope U over R^p
    - noise_source: generator or sample file for eta (may be None for pure geometry)
    - grouping: number of base steps lumped into one step of this system
    """

    A: np.ndarray
    B: np.ndarray
    input_set: HalfspacePolytope
    noise_source: Optional["NoiseSource"] = None
    grouping: int = 1

    def __post_init__(self):
        A = _as_matrix(self.A)
        B = _as_matrix(self.B)
        if A.shape[0] != A.shape[1]:
            raise DimensionError(f"A must be square, got {A.shape}")
        if B.shape[0] != A.shape[0]:
            raise DimensionError(f"B must have {A.shape[0]} rows, got {B.shape}")
        if self.input_set.dimension != B.shape[1]:
            raise DimensionError(
                f"input set has dimension {self.input_set.dimension}, B has {B.shape[1]} columns"
            )

        from ..lqr import check_controllability

        if abs(np.linalg.det(A)) <= RANK_TOLERANCE * max(1.0, np.abs(A).max()):
            raise AssumptionError("invertible dynamics", "the state matrix A is singular")
        if not check_controllability(A, B):
            raise AssumptionError("controllability", "the pair (A, B) is not controllable")

        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def state_dim(self) -> int:
        return self.A.shape[0]

    @property
    def input_dim(self) -> int:
        return self.B.shape[1]

    @property
    def input_is_square(self) -> bool:
        return self.state_dim == self.input_dim

    def step(self, x, u, noise=None) -> np.ndarray:
        """One noisy (or noiseless) step of the dynamics."""
        successor = self.A @ np.asarray(x, dtype=float) + self.B @ np.asarray(u, dtype=float)
        if noise is not None:
            successor = successor + noise
        return successor


@dataclass(frozen=True, eq=False)
class StabilizedSystem:
    """
    Two-layer closed loop x+ = A_cl x + B u' + eta with u = -K x + u'.

    - base: the open-loop LinearSystem
    - K: (p, n) stabilizing gain
    - A_cl: A - B K, non-singular
    - abstract_input_set: U' over R^p containing the origin
    """

    base: LinearSystem
    K: np.ndarray
    A_cl: np.ndarray
    abstract_input_set: HalfspacePolytope

    @property
    def state_dim(self) -> int:
        return self.base.state_dim

    @property
    def input_dim(self) -> int:
        return self.base.input_dim


@dataclass(frozen=True, eq=False)
class LQRWeights:
    """
    LQR cost matrices.

    - Q: (n, n) symmetric positive semidefinite state cost
    - R: (p, p) symmetric positive definite input cost
    """

    Q: np.ndarray
    R: np.ndarray

    def __post_init__(self):
        Q = _as_matrix(self.Q)
        R = _as_matrix(self.R)

        for name, matrix in (("Q", Q), ("R", R)):
            if matrix.shape[0] != matrix.shape[1]:
                raise DimensionError(f"{name} must be square, got {matrix.shape}")
            if not np.allclose(matrix, matrix.T):
                raise DimensionError(f"{name} must be symmetric")

        if np.linalg.eigvalsh(Q).min() < -RANK_TOLERANCE:
            raise AssumptionError("LQR weights", "Q is not positive semidefinite")
        if np.linalg.eigvalsh(R).min() <= 0.0:
            raise AssumptionError("LQR weights", "R is not positive definite")

        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "R", R)


@dataclass(frozen=True)
class GainValidation:
    """
    Outcome of checking a feedback gain for admissibility.

    - ok: True if -K v lies in U at every vertex v of X and A - BK is non-singular
    - vertex: the first offending vertex, if any
    - message: human-readable description of the violation
    """

    ok: bool
    vertex: Optional[tuple[float, ...]] = None
    message: str = ""
