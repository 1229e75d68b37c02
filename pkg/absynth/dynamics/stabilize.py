import numpy as np
from geometry import HalfspacePolytope, HyperRectangle, contains_point
from utils import get_logger
from utils.config import RANK_TOLERANCE
from utils.errors import AssumptionError, DimensionError

from .lqr import spectral_radius
from .types import GainValidation, LinearSystem, StabilizedSystem

logger = get_logger(__name__)


def validate_gain(
    system: LinearSystem, K, region: HyperRectangle
) -> GainValidation:
    """
    Check that a feedback gain is admissible on a box-shaped state region.

    By linearity of -K x and convexity of U it suffices to check the vertices
    of the region.

    Args:
        system (LinearSystem): Open-loop system providing A, B and U
        K: (p, n) gain
        region (HyperRectangle): State region X

    Returns:
        GainValidation: ok, or the first offending vertex / the singularity
    """
    K = np.array(K, dtype=float, ndmin=2)
    if K.shape != (system.input_dim, system.state_dim):
        raise DimensionError(
            f"gain must have shape {(system.input_dim, system.state_dim)}, got {K.shape}"
        )
    if region.dimension != system.state_dim:
        raise DimensionError(
            f"region has dimension {region.dimension}, system has {system.state_dim}"
        )

    # Upper corner first
    for vertex in region.vertices()[::-1]:
        if not contains_point(system.input_set, -K @ vertex):
            return GainValidation(
                ok=False,
                vertex=tuple(float(v) for v in vertex),
                message=f"-K x leaves the input set at vertex {vertex.tolist()}",
            )

    A_cl = system.A - system.B @ K
    if abs(np.linalg.det(A_cl)) <= RANK_TOLERANCE:
        return GainValidation(ok=False, message="A - BK is singular")

    return GainValidation(ok=True)


def make_stabilized(
    system: LinearSystem,
    K,
    abstract_input_set: HalfspacePolytope,
    region: HyperRectangle,
) -> StabilizedSystem:
    """
    Build the two-layer closed loop A_cl = A - BK.

    Args:
        system (LinearSystem): Open-loop system
        K: (p, n) stabilizing gain
        abstract_input_set (HalfspacePolytope): U', must contain the origin
        region (HyperRectangle): State region X used for the admissibility check

    Returns:
        StabilizedSystem: Validated closed-loop system
    """
    validation = validate_gain(system, K, region)
    if not validation.ok:
        raise AssumptionError("admissible gain", validation.message)

    if abstract_input_set.dimension != system.input_dim:
        raise DimensionError(
            f"U' has dimension {abstract_input_set.dimension}, expected {system.input_dim}"
        )
    if not contains_point(abstract_input_set, np.zeros(system.input_dim)):
        raise AssumptionError("abstract input origin", "the abstract input set U' must contain the origin")

    K = np.array(K, dtype=float, ndmin=2)
    A_cl = system.A - system.B @ K
    K.setflags(write=False)
    A_cl.setflags(write=False)

    logger.info(f"Stabilized system with spectral radius {spectral_radius(A_cl):.6f}")
    return StabilizedSystem(
        base=system, K=K, A_cl=A_cl, abstract_input_set=abstract_input_set
    )
