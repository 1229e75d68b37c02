import numpy as np
from utils.config import BOUNDARY_TOLERANCE, MAX_VERTEX_DIMENSION
from utils.errors import DimensionError

from .types import HalfspacePolytope, HyperRectangle


def contains_point(polytope: HalfspacePolytope, x) -> bool:
    """
    Check whether a point satisfies every halfspace of a polytope.

    Args:
        polytope (HalfspacePolytope): Polytope to test against
        x: Point with the polytope's dimension

    Returns:
        bool: True iff C @ x <= d + 1e-9 holds row-wise (boundary inclusive)
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.shape[0] != polytope.dimension:
        raise DimensionError(
            f"point has dimension {x.shape[0]}, polytope has {polytope.dimension}"
        )
    return bool(
        np.all(polytope.constraint_matrix @ x <= polytope.offset + BOUNDARY_TOLERANCE)
    )


def contains_points(polytope: HalfspacePolytope, points) -> np.ndarray:
    """
    Vectorized contains_point over the rows of `points`.

    Returns:
        np.ndarray: Boolean mask, one entry per point
    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != polytope.dimension:
        raise DimensionError(
            f"points of shape {points.shape} do not match dimension {polytope.dimension}"
        )
    values = points @ polytope.constraint_matrix.T
    return np.all(values <= polytope.offset + BOUNDARY_TOLERANCE, axis=1)


def rect_inside_polytope(rect: HyperRectangle, polytope: HalfspacePolytope) -> bool:
    """
    Exact containment of a box in a polytope by checking all 2^n corners.

    Args:
        rect (HyperRectangle): Box to test
        polytope (HalfspacePolytope): Candidate superset

    Returns:
        bool: True iff every vertex of `rect` lies in `polytope`
    """
    if rect.dimension != polytope.dimension:
        raise DimensionError(
            f"box has dimension {rect.dimension}, polytope has {polytope.dimension}"
        )
    if rect.dimension > MAX_VERTEX_DIMENSION:
        raise DimensionError(
            f"vertex enumeration limited to dimension {MAX_VERTEX_DIMENSION}, got {rect.dimension}"
        )
    return bool(np.all(contains_points(polytope, rect.vertices())))


def rect_support(lower, upper, polytope: HalfspacePolytope) -> np.ndarray:
    """
    Maximum of every halfspace's linear form over each of a batch of boxes.

    The maximum of c.x over [l, u] is attained at a vertex and equals
    c.center + |c|.halfwidth, so comparing it with the offset is the vertex test
    without enumerating 2^n corners.

    Args:
        lower: (L, n) lower corners
        upper: (L, n) upper corners
        polytope (HalfspacePolytope): Polytope providing the linear forms

    Returns:
        np.ndarray: (L, q) array of support values
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    if lower.shape != upper.shape or lower.shape[-1] != polytope.dimension:
        raise DimensionError("box batch does not match the polytope dimension")
    center = (lower + upper) / 2.0
    halfwidth = (upper - lower) / 2.0
    matrix = polytope.constraint_matrix
    return center @ matrix.T + halfwidth @ np.abs(matrix).T


def affine_preimage(polytope: HalfspacePolytope, matrix, shift) -> HalfspacePolytope:
    """
    Preimage of a polytope under the affine map x -> M x + b.

    Args:
        polytope (HalfspacePolytope): Set {y : C y <= d} in the map's output space
        matrix: M with as many rows as the polytope's dimension
        shift: b in the output space

    Returns:
        HalfspacePolytope: {x : C (M x + b) <= d} = (C M, d - C b)
    """
    matrix = np.array(matrix, dtype=float, ndmin=2)
    shift = np.asarray(shift, dtype=float).reshape(-1)
    if matrix.shape[0] != polytope.dimension or shift.shape[0] != polytope.dimension:
        raise DimensionError(
            f"map of shape {matrix.shape} with shift {shift.shape} does not land in "
            f"dimension {polytope.dimension}"
        )

    new_matrix = polytope.constraint_matrix @ matrix
    new_offset = polytope.offset - polytope.constraint_matrix @ shift

    # Rows annihilated by a singular map are either always true or never true
    degenerate = ~np.any(new_matrix != 0.0, axis=1)
    if np.any(degenerate):
        if np.any(new_offset[degenerate] < -BOUNDARY_TOLERANCE):
            return HalfspacePolytope.empty(matrix.shape[1])
        new_matrix = new_matrix[~degenerate]
        new_offset = new_offset[~degenerate]

    return HalfspacePolytope(new_matrix, new_offset)
