import numpy as np
from dynamics import LinearSystem, StabilizedSystem
from geometry import HalfspacePolytope, affine_preimage
from utils import get_logger
from utils.config import RANK_TOLERANCE
from utils.errors import DimensionError, GeometryError

logger = get_logger(__name__)


def input_inverse(system: LinearSystem) -> np.ndarray:
    """
    Inverse of the (effective) input matrix.

    Raises:
        DimensionError: If B is not square (group the dynamics first)
        GeometryError: If B is singular
    """
    if not system.input_is_square:
        raise DimensionError(
            f"backward sets need a square input matrix, got {system.B.shape}; "
            "group the dynamics first"
        )
    try:
        return np.linalg.inv(system.B)
    except np.linalg.LinAlgError as e:
        raise GeometryError(f"the input matrix is singular: {e}") from e


def backward_set_single(
    system: LinearSystem, target, B_inv: np.ndarray | None = None
) -> HalfspacePolytope:
    """
    Backward reachable set of a target point under the open-loop dynamics.

    The unique input steering x to d_a is u(x) = B^-1 (d_a - A x), so the set
    is the preimage of U under that affine map.

    Args:
        system (LinearSystem): System with square invertible B
        target: Target point d_a
        B_inv: Precomputed inverse of B (optional)

    Returns:
        HalfspacePolytope: {x : G B^-1 (d_a - A x) <= g}
    """
    target = np.asarray(target, dtype=float).reshape(-1)
    if B_inv is None:
        B_inv = input_inverse(system)
    return affine_preimage(system.input_set, -(B_inv @ system.A), B_inv @ target)


def backward_set_two_layer(
    system: StabilizedSystem, target, B_inv: np.ndarray | None = None
) -> HalfspacePolytope:
    """
    Backward reachable set of a target point under the two-layer control law.

    With u'(x) = B^-1 (d_a - A_cl x) the total input is u = -K x + u'(x). The
    set keeps the states for which u lies in U and u' lies in U'.

    Args:
        system (StabilizedSystem): Closed loop with square invertible B
        target: Target point d_a
        B_inv: Precomputed inverse of B (optional)

    Returns:
        HalfspacePolytope: Total-input rows followed by abstract-input rows
    """
    target = np.asarray(target, dtype=float).reshape(-1)
    if B_inv is None:
        B_inv = input_inverse(system.base)
    if abs(np.linalg.det(system.A_cl)) <= RANK_TOLERANCE:
        raise GeometryError("the closed-loop matrix A - BK is singular")

    abstract_map = -(B_inv @ system.A_cl)
    shift = B_inv @ target
    total = affine_preimage(system.base.input_set, -system.K + abstract_map, shift)
    abstract = affine_preimage(system.abstract_input_set, abstract_map, shift)
    return total.stack(abstract)


def zero_input_state(system: StabilizedSystem, target) -> np.ndarray:
    """The state A_cl^-1 d_a, reached from itself with u' = 0."""
    return np.linalg.solve(system.A_cl, np.asarray(target, dtype=float))


def build_backward_sets(
    system: LinearSystem | StabilizedSystem, targets
) -> list[HalfspacePolytope]:
    """
    Backward sets for every target, single- or two-layer depending on the system type.

    Args:
        system: LinearSystem (single layer) or StabilizedSystem (two layer)
        targets: (actions, n) target points

    Returns:
        list[HalfspacePolytope]: One backward set per action
    """
    if isinstance(system, StabilizedSystem):
        B_inv = input_inverse(system.base)
        sets = [backward_set_two_layer(system, d, B_inv) for d in targets]
        layer = "two-layer"
    else:
        B_inv = input_inverse(system)
        sets = [backward_set_single(system, d, B_inv) for d in targets]
        layer = "single-layer"

    logger.info(f"Computed {len(sets)} {layer} backward sets")
    return sets
