from .assemble import assemble_imdp, validate_imdp
from .export import export_interval_model, parse_interval_model, parse_policy
from .solver import (
    check_row,
    inner_min_expectation,
    point_mdp_value_iteration,
    robust_value_iteration,
)
from .types import IMDP, Policy, ValueTable

__all__ = [
    "assemble_imdp",
    "validate_imdp",
    "export_interval_model",
    "parse_interval_model",
    "parse_policy",
    "check_row",
    "inner_min_expectation",
    "point_mdp_value_iteration",
    "robust_value_iteration",
    "IMDP",
    "Policy",
    "ValueTable",
]
