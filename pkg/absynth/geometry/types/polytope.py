from dataclasses import dataclass

import numpy as np
from utils.errors import DimensionError, GeometryError


@dataclass(frozen=True, eq=False)
class HalfspacePolytope:
    """
    Convex polytope in halfspace form {x : constraint_matrix @ x <= offset}.

    - constraint_matrix: (q, n) array, every row has a nonzero entry
    - offset: (q,) array

    A polytope with zero rows is the whole space R^n. Emptiness is allowed and
    is not detected at construction time.
    """

    constraint_matrix: np.ndarray
    offset: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.constraint_matrix, dtype=float, ndmin=2)
        offset = np.array(self.offset, dtype=float).reshape(-1)

        if matrix.shape[0] != offset.shape[0]:
            raise DimensionError(
                f"constraint matrix has {matrix.shape[0]} rows but offset has "
                f"{offset.shape[0]} entries"
            )
        if matrix.shape[0] and not np.all(np.any(matrix != 0.0, axis=1)):
            raise GeometryError("every halfspace needs a nonzero normal")

        matrix.setflags(write=False)
        offset.setflags(write=False)
        object.__setattr__(self, "constraint_matrix", matrix)
        object.__setattr__(self, "offset", offset)

    @property
    def dimension(self) -> int:
        return self.constraint_matrix.shape[1]

    @property
    def row_count(self) -> int:
        return self.constraint_matrix.shape[0]

    @classmethod
    def from_box(cls, lower, upper) -> "HalfspacePolytope":
        """
        Build the H-representation of the box [lower, upper].

        Args:
            lower: Lower corner
            upper: Upper corner

        Returns:
            HalfspacePolytope: Rows x_i <= upper_i followed by -x_i <= -lower_i
        """
        lower = np.asarray(lower, dtype=float).reshape(-1)
        upper = np.asarray(upper, dtype=float).reshape(-1)
        if lower.shape != upper.shape:
            raise DimensionError("box corners differ in dimension")
        identity = np.eye(lower.shape[0])
        return cls(np.vstack([identity, -identity]), np.concatenate([upper, -lower]))

    @classmethod
    def unconstrained(cls, dimension: int) -> "HalfspacePolytope":
        """The whole space R^dimension (no rows)."""
        return cls(np.zeros((0, dimension)), np.zeros(0))

    @classmethod
    def empty(cls, dimension: int) -> "HalfspacePolytope":
        """An empty set: x_1 <= -1 and -x_1 <= -1."""
        normal = np.zeros((1, dimension))
        normal[0, 0] = 1.0
        return cls(np.vstack([normal, -normal]), np.array([-1.0, -1.0]))

    def stack(self, other: "HalfspacePolytope") -> "HalfspacePolytope":
        """Intersection with another polytope of the same dimension."""
        if other.dimension != self.dimension:
            raise DimensionError(
                f"cannot intersect polytopes of dimension {self.dimension} and {other.dimension}"
            )
        return HalfspacePolytope(
            np.vstack([self.constraint_matrix, other.constraint_matrix]),
            np.concatenate([self.offset, other.offset]),
        )

    def product(self, other: "HalfspacePolytope") -> "HalfspacePolytope":
        """Cartesian product self x other as a block-diagonal H-representation."""
        top = np.hstack(
            [self.constraint_matrix, np.zeros((self.row_count, other.dimension))]
        )
        bottom = np.hstack(
            [np.zeros((other.row_count, self.dimension)), other.constraint_matrix]
        )
        return HalfspacePolytope(
            np.vstack([top, bottom]), np.concatenate([self.offset, other.offset])
        )

    def to_dict(self) -> dict:
        return {
            "matrix": self.constraint_matrix.tolist(),
            "offset": self.offset.tolist(),
        }
