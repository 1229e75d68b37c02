from .grouping import group_dynamics, grouped_horizon
from .lqr import (
    check_controllability,
    closed_loop_eigenvalues,
    controllability_matrix,
    riccati_residual,
    solve_dare,
    spectral_radius,
)
from .models import clohessy_wiltshire
from .stabilize import make_stabilized, validate_gain
from .types import GainValidation, LinearSystem, LQRWeights, StabilizedSystem

__all__ = [
    "group_dynamics",
    "grouped_horizon",
    "check_controllability",
    "closed_loop_eigenvalues",
    "controllability_matrix",
    "riccati_residual",
    "solve_dare",
    "spectral_radius",
    "clohessy_wiltshire",
    "make_stabilized",
    "validate_gain",
    "GainValidation",
    "LinearSystem",
    "LQRWeights",
    "StabilizedSystem",
]
