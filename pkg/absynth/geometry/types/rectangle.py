import itertools
from dataclasses import dataclass

import numpy as np
from utils.config import BOUNDARY_TOLERANCE
from utils.errors import DimensionError, GeometryError


@dataclass(frozen=True, eq=False)
class HyperRectangle:
    """
    Axis-aligned box [lower, upper] in R^n.

    Degenerate boxes (lower_i == upper_i) are legal.
    """

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.array(self.lower, dtype=float).reshape(-1)
        upper = np.array(self.upper, dtype=float).reshape(-1)

        if lower.shape != upper.shape:
            raise DimensionError(
                f"lower has {lower.shape[0]} entries but upper has {upper.shape[0]}"
            )
        if np.any(lower > upper):
            raise GeometryError(f"lower {lower.tolist()} exceeds upper {upper.tolist()}")

        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dimension(self) -> int:
        return self.lower.shape[0]

    @property
    def center(self) -> np.ndarray:
        return (self.lower + self.upper) / 2.0

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def vertices(self) -> np.ndarray:
        """All 2^n corners, one per row, in lexicographic lower/upper order."""
        return np.array(
            list(itertools.product(*zip(self.lower, self.upper))), dtype=float
        ).reshape(-1, self.dimension)

    def contains_point(self, x) -> bool:
        x = np.asarray(x, dtype=float).reshape(-1)
        if x.shape[0] != self.dimension:
            raise DimensionError(
                f"point has dimension {x.shape[0]}, box has {self.dimension}"
            )
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def contains_rect(self, other: "HyperRectangle") -> bool:
        """Closed containment other ⊆ self, up to the boundary tolerance."""
        return bool(
            np.all(other.lower >= self.lower - BOUNDARY_TOLERANCE)
            and np.all(other.upper <= self.upper + BOUNDARY_TOLERANCE)
        )

    def intersects_interior(self, other: "HyperRectangle") -> bool:
        """True iff the two boxes overlap with positive measure (shared faces do not count)."""
        low = np.maximum(self.lower, other.lower)
        high = np.minimum(self.upper, other.upper)
        return bool(np.all(low < high))

    def to_dict(self) -> dict:
        return {"lower": self.lower.tolist(), "upper": self.upper.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "HyperRectangle":
        return cls(lower=data["lower"], upper=data["upper"])
