from dataclasses import dataclass
from functools import cached_property

import numpy as np
from geometry import HyperRectangle


@dataclass(frozen=True, eq=False)
class Partition:
    """
    Rectangular tiling of the domain X plus one sink location for R^n \\ X.

    - domain: the box X
    - counts: regions per dimension

    Regions are numbered by flattening their multi-index row-major; the sink
    takes the id prod(counts), after every region.
    """

    domain: HyperRectangle
    counts: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self.domain.dimension

    @cached_property
    def width(self) -> np.ndarray:
        return self.domain.width / np.asarray(self.counts, dtype=float)

    @property
    def region_count(self) -> int:
        return int(np.prod(self.counts))

    @property
    def sink_id(self) -> int:
        return self.region_count

    @property
    def location_count(self) -> int:
        return self.region_count + 1

    @cached_property
    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        """(lower, upper) corner arrays of shape (regions, n), indexed by region id."""
        index = np.stack(
            np.unravel_index(np.arange(self.region_count), self.counts), axis=1
        )
        lower = self.domain.lower + index * self.width
        upper = self.domain.lower + (index + 1) * self.width
        # Pin the outer faces to the domain exactly
        last = index == np.asarray(self.counts) - 1
        upper = np.where(last, self.domain.upper, upper)
        lower.setflags(write=False)
        upper.setflags(write=False)
        return lower, upper

    @cached_property
    def centers(self) -> np.ndarray:
        lower, upper = self.bounds
        centers = (lower + upper) / 2.0
        centers.setflags(write=False)
        return centers

    def region(self, location: int) -> HyperRectangle:
        """
        Get the box of a non-sink location.

        Args:
            location (int): Region id in [0, region_count)

        Returns:
            HyperRectangle: The region's box
        """
        if not 0 <= location < self.region_count:
            raise IndexError(f"location {location} is not a region of this partition")
        lower, upper = self.bounds
        return HyperRectangle(lower[location], upper[location])

    def to_dict(self) -> dict:
        return {
            "lower": self.domain.lower.tolist(),
            "upper": self.domain.upper.tolist(),
            "counts": list(self.counts),
        }
