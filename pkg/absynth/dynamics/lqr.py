import numpy as np
from utils import get_logger
from utils.config import DARE_MAX_ITERATIONS, DARE_TOLERANCE, RANK_TOLERANCE
from utils.errors import ConvergenceError, DimensionError

from .types import LQRWeights

logger = get_logger(__name__)


def controllability_matrix(A, B) -> np.ndarray:
    """Stack [B, AB, ..., A^(n-1) B] column-wise."""
    A = np.array(A, dtype=float, ndmin=2)
    B = np.array(B, dtype=float, ndmin=2)
    if A.shape[0] != A.shape[1] or B.shape[0] != A.shape[0]:
        raise DimensionError(f"incompatible shapes A {A.shape} and B {B.shape}")

    blocks = [B]
    for _ in range(A.shape[0] - 1):
        blocks.append(A @ blocks[-1])
    return np.hstack(blocks)


def check_controllability(A, B) -> bool:
    """
    Check whether the pair (A, B) is controllable.

    Args:
        A: (n, n) state matrix
        B: (n, p) input matrix

    Returns:
        bool: True iff the controllability matrix has rank n, counting singular
              values above 1e-9 times the largest one
    """
    matrix = controllability_matrix(A, B)
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if singular_values.size == 0 or singular_values[0] == 0.0:
        return False
    rank = int(np.sum(singular_values > RANK_TOLERANCE * singular_values[0]))
    return rank == matrix.shape[0]


def closed_loop_eigenvalues(A_cl) -> np.ndarray:
    """Eigenvalues of a closed-loop matrix (diagnostics only)."""
    return np.linalg.eigvals(np.array(A_cl, dtype=float, ndmin=2))


def spectral_radius(matrix) -> float:
    return float(np.max(np.abs(closed_loop_eigenvalues(matrix))))


def solve_dare(A, B, weights: LQRWeights) -> tuple[np.ndarray, np.ndarray]:
    """
    Solve the discrete algebraic Riccati equation by fixed-point iteration.

    Iterates P <- Q + A'PA - A'PB (R + B'PB)^-1 B'PA from P = Q until the
    largest entry change drops below 1e-10.

    Args:
        A: (n, n) state matrix
        B: (n, p) input matrix
        weights (LQRWeights): State and input costs

    Returns:
        tuple[np.ndarray, np.ndarray]: Riccati solution P and LQR gain K with
                                       u = -K x
    """
    A = np.array(A, dtype=float, ndmin=2)
    B = np.array(B, dtype=float, ndmin=2)
    Q, R = weights.Q, weights.R
    if Q.shape != A.shape or R.shape[0] != B.shape[1] or B.shape[0] != A.shape[0]:
        raise DimensionError(
            f"weights Q {Q.shape}, R {R.shape} do not match A {A.shape}, B {B.shape}"
        )

    P = Q.copy()
    for iteration in range(1, DARE_MAX_ITERATIONS + 1):
        gain = _riccati_gain(A, B, R, P)
        P_next = Q + A.T @ P @ A - A.T @ P @ B @ gain
        P_next = (P_next + P_next.T) / 2.0
        change = np.max(np.abs(P_next - P))
        P = P_next
        if change < DARE_TOLERANCE:
            logger.debug(f"DARE converged after {iteration} iterations")
            break
    else:
        raise ConvergenceError(
            f"DARE did not converge within {DARE_MAX_ITERATIONS} iterations"
        )

    K = _riccati_gain(A, B, R, P)
    radius = spectral_radius(A - B @ K)
    if radius >= 1.0:
        raise ConvergenceError(
            f"LQR gain does not stabilize the system (spectral radius {radius:.6f})"
        )
    logger.info(f"LQR closed-loop spectral radius {radius:.6f}")
    return P, K


def riccati_residual(A, B, weights: LQRWeights, P) -> float:
    """Largest absolute entry of the Riccati equation residual at P."""
    A = np.array(A, dtype=float, ndmin=2)
    B = np.array(B, dtype=float, ndmin=2)
    P = np.array(P, dtype=float, ndmin=2)
    gain = _riccati_gain(A, B, weights.R, P)
    residual = weights.Q + A.T @ P @ A - A.T @ P @ B @ gain - P
    return float(np.max(np.abs(residual)))


def _riccati_gain(A, B, R, P) -> np.ndarray:
    try:
        return np.linalg.solve(R + B.T @ P @ B, B.T @ P @ A)
    except np.linalg.LinAlgError as e:
        raise ConvergenceError(f"R + B'PB is singular: {e}") from e
