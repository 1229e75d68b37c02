from dataclasses import dataclass
from typing import Optional

import numpy as np
from utils.errors import ConfigError, DimensionError


@dataclass(frozen=True, eq=False)
class NoiseSource:
    """
    Source of i.i.d. additive noise samples.

    - kind: "gaussian", "file" or "lumped"
    - dimension: noise dimension n
    - mean, covariance: Gaussian parameters (kind "gaussian")
    - recorded: (rows, n) recorded samples (kind "file")
    - path: where the recorded samples came from (kind "file")
    - base, weights: base source and the matrices A^(m-1-j) summing m base draws (kind "lumped")
    """

    kind: str
    dimension: int
    mean: Optional[np.ndarray] = None
    covariance: Optional[np.ndarray] = None
    recorded: Optional[np.ndarray] = None
    path: Optional[str] = None
    base: Optional["NoiseSource"] = None
    weights: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.kind == "gaussian":
            mean = np.asarray(self.mean, dtype=float).reshape(-1)
            covariance = np.array(self.covariance, dtype=float, ndmin=2)
            if mean.shape[0] != self.dimension or covariance.shape != (self.dimension,) * 2:
                raise DimensionError(
                    f"Gaussian noise of dimension {self.dimension} got mean {mean.shape} "
                    f"and covariance {covariance.shape}"
                )
            if not np.allclose(covariance, covariance.T):
                raise ConfigError("noise.covariance", "must be symmetric")
            if np.linalg.eigvalsh(covariance).min() < -1e-12:
                raise ConfigError("noise.covariance", "must be positive semidefinite")
            object.__setattr__(self, "mean", mean)
            object.__setattr__(self, "covariance", covariance)
        elif self.kind == "file":
            recorded = np.array(self.recorded, dtype=float, ndmin=2)
            if recorded.shape[1] != self.dimension or recorded.shape[0] < 1:
                raise DimensionError(
                    f"recorded noise must have at least one row of {self.dimension} columns, "
                    f"got {recorded.shape}"
                )
            recorded.setflags(write=False)
            object.__setattr__(self, "recorded", recorded)
        elif self.kind == "lumped":
            if self.base is None or self.weights is None:
                raise ConfigError("noise", "lumped noise needs a base source and weights")
        else:
            raise ConfigError("noise.kind", f"unknown noise kind '{self.kind}'")

    @classmethod
    def gaussian(cls, mean, covariance) -> "NoiseSource":
        mean = np.asarray(mean, dtype=float).reshape(-1)
        return cls(kind="gaussian", dimension=mean.shape[0], mean=mean, covariance=covariance)

    @classmethod
    def from_samples(cls, recorded, path: Optional[str] = None) -> "NoiseSource":
        recorded = np.array(recorded, dtype=float, ndmin=2)
        return cls(kind="file", dimension=recorded.shape[1], recorded=recorded, path=path)

    @property
    def is_recorded(self) -> bool:
        """True if samples come from a fixed recording rather than a generator."""
        if self.kind == "lumped":
            return self.base.is_recorded
        return self.kind == "file"

    def lumped(self, A, m: int) -> "NoiseSource":
        """
        Noise of the m-step grouped system: sum_j A^(m-1-j) eta_j.

        Args:
            A: Base state matrix
            m (int): Number of grouped steps

        Returns:
            NoiseSource: Lumped source wrapping this one
        """
        A = np.array(A, dtype=float, ndmin=2)
        powers = [np.eye(self.dimension)]
        for _ in range(m - 1):
            powers.append(A @ powers[-1])
        weights = np.stack(powers[::-1])
        return NoiseSource(kind="lumped", dimension=self.dimension, base=self, weights=weights)

    def draw(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """
        Draw `count` fresh samples.

        Gaussian noise is mean + L z with z standard normal from `rng` and L a
        factor of the covariance; recorded noise is resampled uniformly with
        replacement.

        Args:
            rng (np.random.Generator): Seeded generator
            count (int): Number of samples

        Returns:
            np.ndarray: (count, n) samples
        """
        if self.kind == "gaussian":
            z = rng.standard_normal((count, self.dimension))
            return self.mean + z @ self._factor().T
        if self.kind == "file":
            rows = rng.integers(0, self.recorded.shape[0], size=count)
            return self.recorded[rows]
        m = self.weights.shape[0]
        raw = self.base.draw(rng, count * m).reshape(count, m, self.dimension)
        return self._combine(raw)

    def take(self, count: int) -> np.ndarray:
        """
        The first `count` recorded samples, in file order (recorded sources only).
        """
        if self.kind == "file":
            if count > self.recorded.shape[0]:
                raise ConfigError(
                    "scenario.samples",
                    f"{count} samples requested but only {self.recorded.shape[0]} recorded",
                )
            return np.array(self.recorded[:count])
        if self.kind == "lumped" and self.base.is_recorded:
            m = self.weights.shape[0]
            raw = self.base.take(count * m).reshape(count, m, self.dimension)
            return self._combine(raw)
        raise ConfigError("noise.kind", f"'{self.kind}' noise has no recording to take from")

    def describe(self) -> str:
        if self.kind == "gaussian":
            return "gaussian"
        if self.kind == "file":
            return f"file:{self.path}" if self.path else "file"
        return f"lumped{self.weights.shape[0]}({self.base.describe()})"

    def _combine(self, raw: np.ndarray) -> np.ndarray:
        return np.einsum("jab,cjb->ca", self.weights, raw)

    def _factor(self) -> np.ndarray:
        try:
            return np.linalg.cholesky(self.covariance)
        except np.linalg.LinAlgError:
            # Singular covariance
            values, vectors = np.linalg.eigh(self.covariance)
            return vectors * np.sqrt(np.clip(values, 0.0, None))
