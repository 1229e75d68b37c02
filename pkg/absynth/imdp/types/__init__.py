from .model import IMDP
from .policy import Policy
from .values import ValueTable

__all__ = ["IMDP", "Policy", "ValueTable"]
