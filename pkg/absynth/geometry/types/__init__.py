from .polytope import HalfspacePolytope
from .rectangle import HyperRectangle

__all__ = ["HalfspacePolytope", "HyperRectangle"]
