from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True, eq=False)
class SampleSet:
    """
    Noise samples shared by every action and both abstraction layers.

    - samples: (N, n) array
    - seed: generator seed, None for recorded samples
    - source: short description of where the samples came from
    """

    samples: np.ndarray
    seed: Optional[int] = None
    source: str = ""

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float, ndmin=2)
        if samples.shape[0] < 1:
            raise ValueError("a sample set needs at least one sample")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def N(self) -> int:
        return self.samples.shape[0]

    @property
    def dimension(self) -> int:
        return self.samples.shape[1]
