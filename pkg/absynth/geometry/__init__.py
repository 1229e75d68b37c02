from .operations import (
    affine_preimage,
    contains_point,
    contains_points,
    rect_inside_polytope,
    rect_support,
)
from .types import HalfspacePolytope, HyperRectangle

__all__ = [
    "affine_preimage",
    "contains_point",
    "contains_points",
    "rect_inside_polytope",
    "rect_support",
    "HalfspacePolytope",
    "HyperRectangle",
]
