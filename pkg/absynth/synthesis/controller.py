from typing import Optional

import numpy as np
from abstraction import Partition, input_inverse, locate
from dynamics import LinearSystem, StabilizedSystem
from geometry import contains_point
from imdp import Policy
from utils.errors import GeometryError

from .types import RefinedController


def build_controller(
    policy: Policy,
    partition: Partition,
    targets,
    system: LinearSystem | StabilizedSystem,
) -> RefinedController:
    """
    Wrap a policy into a feedback controller for the layer it was synthesized for.

    Args:
        policy (Policy): iMDP policy
        partition (Partition): The partition
        targets: (actions, n) target points
        system: LinearSystem (single layer) or StabilizedSystem (two layer)

    Returns:
        RefinedController: The controller
    """
    if isinstance(system, StabilizedSystem):
        base, stabilized = system.base, system
    else:
        base, stabilized = system, None
    return RefinedController(
        policy=policy,
        partition=partition,
        targets=np.asarray(targets, dtype=float),
        system=base,
        B_inv=input_inverse(base),
        stabilized=stabilized,
    )


def refine_inputs(
    ctrl: RefinedController, x, k: int
) -> Optional[tuple[np.ndarray, np.ndarray]]:
    """
    Total and abstract input at state x and step k.

    In single-layer mode both are u = B^-1 (d_a - A x). In two-layer mode the
    abstract input is u' = B^-1 (d_a - A_cl x) and the total input u = -K x + u'.

    Returns:
        Optional[tuple[np.ndarray, np.ndarray]]: (u, u'), or None if x lies in
        the sink or the policy is undefined there
    """
    if not 0 <= k < ctrl.horizon:
        raise ValueError(f"step {k} outside [0, {ctrl.horizon})")
    x = np.asarray(x, dtype=float).reshape(-1)

    location = locate(ctrl.partition, x)
    if location == ctrl.partition.sink_id:
        return None
    action = ctrl.policy.action(location, k)
    if action is None:
        return None
    target = ctrl.targets[action]

    if ctrl.stabilized is None:
        u = ctrl.B_inv @ (target - ctrl.system.A @ x)
        u_abstract = u
    else:
        u_abstract = ctrl.B_inv @ (target - ctrl.stabilized.A_cl @ x)
        u = -ctrl.stabilized.K @ x + u_abstract
        if not contains_point(ctrl.stabilized.abstract_input_set, u_abstract):
            raise GeometryError(
                f"abstract input {u_abstract.tolist()} at location {location}, step {k} "
                "leaves U'"
            )

    if not contains_point(ctrl.system.input_set, u):
        raise GeometryError(
            f"input {u.tolist()} at location {location}, step {k} leaves U"
        )
    return u, u_abstract


def refine_control(ctrl: RefinedController, x, k: int) -> Optional[np.ndarray]:
    """
    Input prescribed by the refined controller.

    Args:
        ctrl (RefinedController): The controller
        x: Current state
        k (int): Time step in [0, H)

    Returns:
        Optional[np.ndarray]: The input u, or None when no action is available

    Raises:
        GeometryError: If the input is not admissible, which means the
            abstraction enabled an action it should not have
    """
    inputs = refine_inputs(ctrl, x, k)
    return None if inputs is None else inputs[0]
