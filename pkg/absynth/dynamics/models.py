import numpy as np
from scipy.linalg import expm


def clohessy_wiltshire(mean_motion: float, sampling_time: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Zero-order-hold discretization of the planar Clohessy-Wiltshire equations.

    State (x, y, vx, vy) is the chaser position and velocity relative to the
    target in the rotating frame; inputs are accelerations (ax, ay).

    Args:
        mean_motion (float): Orbital mean motion of the target
        sampling_time (float): Discretization step

    Returns:
        tuple[np.ndarray, np.ndarray]: Discrete-time A (4x4) and B (4x2)
    """
    n = mean_motion
    A_c = np.array(
        [
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [3.0 * n**2, 0.0, 0.0, 2.0 * n],
            [0.0, 0.0, -2.0 * n, 0.0],
        ]
    )
    B_c = np.array([[0.0, 0.0], [0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])

    # exp([[A_c, B_c], [0, 0]] T) = [[A_d, B_d], [0, I]]
    block = np.zeros((6, 6))
    block[:4, :4] = A_c
    block[:4, 4:] = B_c
    discrete = expm(block * sampling_time)
    return discrete[:4, :4], discrete[:4, 4:]
