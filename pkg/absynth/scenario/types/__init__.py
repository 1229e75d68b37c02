from .interval_table import IntervalTable
from .noise import NoiseSource
from .sample_set import SampleSet

__all__ = ["IntervalTable", "NoiseSource", "SampleSet"]
