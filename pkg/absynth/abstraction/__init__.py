from .backward import (
    backward_set_single,
    backward_set_two_layer,
    build_backward_sets,
    input_inverse,
    zero_input_state,
)
from .enabled import build_action_set, enabled_actions
from .labels import label_locations
from .partition import action_targets, build_partition, locate, locate_many
from .types import ActionSet, LabelSets, Partition

__all__ = [
    "backward_set_single",
    "backward_set_two_layer",
    "build_backward_sets",
    "input_inverse",
    "zero_input_state",
    "build_action_set",
    "enabled_actions",
    "label_locations",
    "action_targets",
    "build_partition",
    "locate",
    "locate_many",
    "ActionSet",
    "LabelSets",
    "Partition",
]
