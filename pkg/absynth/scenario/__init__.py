from .bounds import binomial_lower, binomial_upper, bound_table, confidence_budget
from .intervals import build_interval_table, count_successors, interval_row
from .samples import draw_sample_set, read_sample_file
from .types import IntervalTable, NoiseSource, SampleSet

__all__ = [
    "binomial_lower",
    "binomial_upper",
    "bound_table",
    "confidence_budget",
    "build_interval_table",
    "count_successors",
    "interval_row",
    "draw_sample_set",
    "read_sample_file",
    "IntervalTable",
    "NoiseSource",
    "SampleSet",
]
