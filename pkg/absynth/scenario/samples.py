from pathlib import Path

import numpy as np
from utils import get_logger
from utils.errors import ConfigError

from .types import NoiseSource, SampleSet

logger = get_logger(__name__)


def read_sample_file(path: str | Path, dimension: int | None = None) -> np.ndarray:
    """
    Read recorded noise samples.

    One sample per line, whitespace-separated decimal floats; lines starting
    with '#' are comments.

    Args:
        path: Sample file
        dimension: Expected number of columns (optional)

    Returns:
        np.ndarray: (rows, n) samples
    """
    try:
        samples = np.loadtxt(path, comments="#", ndmin=2, dtype=float)
    except (OSError, ValueError) as e:
        raise ConfigError("noise.path", f"cannot read samples from {path}: {e}") from e

    if samples.shape[0] == 0:
        raise ConfigError("noise.path", f"{path} holds no samples")
    if dimension is not None and samples.shape[1] != dimension:
        raise ConfigError(
            "noise.path", f"{path} has {samples.shape[1]} columns, expected {dimension}"
        )
    logger.info(f"Read {samples.shape[0]} noise samples from {path}")
    return samples


def draw_sample_set(source: NoiseSource, N: int, seed: int) -> SampleSet:
    """
    Draw the sample set used by every action.

    Recorded sources contribute their first N (grouped) samples in file order;
    generators are sampled with numpy's default generator seeded by `seed`.

    Args:
        source (NoiseSource): Noise source of the effective system
        N (int): Number of samples
        seed (int): Seed for generated noise

    Returns:
        SampleSet: The samples with their provenance
    """
    if N < 1:
        raise ConfigError("scenario.samples", f"must be positive, got {N}")

    if source.is_recorded:
        samples = SampleSet(source.take(N), seed=None, source=source.describe())
    else:
        rng = np.random.default_rng(seed)
        samples = SampleSet(source.draw(rng, N), seed=seed, source=source.describe())

    logger.info(f"Drew {samples.N} noise samples ({samples.source}, seed {samples.seed})")
    return samples
