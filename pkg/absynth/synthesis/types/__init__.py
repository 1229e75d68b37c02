from .controller import RefinedController
from .objective import ReachAvoid
from .records import MonteCarloReport, Outcome, TrajectoryRecord

__all__ = ["RefinedController", "ReachAvoid", "MonteCarloReport", "Outcome", "TrajectoryRecord"]
