import numpy as np
from utils import get_logger
from utils.errors import AssumptionError, ConfigError, DimensionError

from .types import LinearSystem

logger = get_logger(__name__)


def group_dynamics(system: LinearSystem, m: int) -> LinearSystem:
    """
    Lump m consecutive steps into one so that the grouped input matrix is square.

    The grouped system is x_{k+m} = A^m x_k + [A^(m-1)B ... AB B] (u_k, ..., u_{k+m-1})
    + sum_j A^(m-1-j) eta_{k+j}, with input set U x ... x U.

    Args:
        system (LinearSystem): Base system with p inputs
        m (int): Number of steps to group, with m * p = n

    Returns:
        LinearSystem: The grouped system (the input system itself when m == 1)
    """
    if m < 1:
        raise ConfigError("grouping", f"must be at least 1, got {m}")
    if m == 1:
        return system
    if m * system.input_dim != system.state_dim:
        raise DimensionError(
            f"grouping {m} with {system.input_dim} inputs does not give a square "
            f"input matrix for {system.state_dim} states"
        )

    powers = [np.eye(system.state_dim)]
    for _ in range(m):
        powers.append(system.A @ powers[-1])

    grouped_A = powers[m]
    grouped_B = np.hstack([powers[m - 1 - j] @ system.B for j in range(m)])
    if abs(np.linalg.det(grouped_B)) <= 1e-12:
        raise AssumptionError("grouping", f"the {m}-step input matrix is singular")

    grouped_U = system.input_set
    for _ in range(m - 1):
        grouped_U = grouped_U.product(system.input_set)

    noise = system.noise_source.lumped(system.A, m) if system.noise_source else None

    logger.info(f"Grouped {m} steps into one ({grouped_B.shape[1]} inputs)")
    return LinearSystem(
        A=grouped_A,
        B=grouped_B,
        input_set=grouped_U,
        noise_source=noise,
        grouping=system.grouping * m,
    )


def grouped_horizon(horizon: int, m: int) -> int:
    """Horizon in grouped steps; the base horizon must be divisible by m."""
    if horizon % m != 0:
        raise ConfigError(
            "property.horizon", f"{horizon} is not divisible by grouping {m}"
        )
    return horizon // m
