__all__ = [
    "AbsynthError",
    "DimensionError",
    "GeometryError",
    "AssumptionError",
    "ConvergenceError",
    "FeasibilityError",
    "LabelError",
    "ConfigError",
    "StageError",
]


class AbsynthError(Exception):
    """Base class for every error raised by the toolkit."""


class DimensionError(AbsynthError, ValueError):
    """Raised when vector or matrix shapes do not agree."""


class GeometryError(AbsynthError):
    """Raised for invalid geometric objects or failed admissibility checks."""


class AssumptionError(AbsynthError):
    """
    Raised when a standing assumption on the system is violated.

    Attributes:
        assumption: Name of the violated assumption, e.g. "controllability"
    """

    def __init__(self, assumption: str, message: str):
        super().__init__(f"{assumption} violated: {message}")
        self.assumption = assumption


class ConvergenceError(AbsynthError):
    """Raised when an iterative solver exhausts its iteration budget."""


class FeasibilityError(AbsynthError):
    """Raised when an interval row cannot hold a probability distribution."""


class LabelError(AbsynthError):
    """Raised when a location would be labeled both goal and unsafe."""


class ConfigError(AbsynthError, ValueError):
    """
    Raised for a missing, ill-typed or inconsistent run configuration field.

    Attributes:
        field: Dotted path of the offending field
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class StageError(AbsynthError):
    """
    Raised when a pipeline stage fails; wraps the original error.

    Attributes:
        stage: Tag of the failing stage
    """

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"[{stage}] {cause}")
        self.stage = stage
        self.cause = cause
