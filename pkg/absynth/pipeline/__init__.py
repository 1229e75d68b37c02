from .config import apply_overrides, load_config, parse_config
from .reports import write_reports
from .runner import run_pipeline
from .sweep import ComparisonRow, compare_layers, write_comparison
from .systems import Systems, build_objective, build_systems
from .types import CERTIFIED, UNKNOWN, RunConfig, RunReport

__all__ = [
    "apply_overrides",
    "load_config",
    "parse_config",
    "write_reports",
    "run_pipeline",
    "ComparisonRow",
    "compare_layers",
    "write_comparison",
    "Systems",
    "build_objective",
    "build_systems",
    "CERTIFIED",
    "UNKNOWN",
    "RunConfig",
    "RunReport",
]
