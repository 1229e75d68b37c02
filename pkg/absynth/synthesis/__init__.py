from .controller import build_controller, refine_control, refine_inputs
from .simulate import monte_carlo, rate_interval, simulate
from .types import MonteCarloReport, Outcome, ReachAvoid, RefinedController, TrajectoryRecord

__all__ = [
    "build_controller",
    "refine_control",
    "refine_inputs",
    "monte_carlo",
    "rate_interval",
    "simulate",
    "MonteCarloReport",
    "Outcome",
    "ReachAvoid",
    "RefinedController",
    "TrajectoryRecord",
]
