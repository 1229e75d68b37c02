from .action_set import ActionSet
from .labels import LabelSets
from .partition import Partition

__all__ = ["ActionSet", "LabelSets", "Partition"]
