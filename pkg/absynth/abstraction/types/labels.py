from dataclasses import dataclass

from utils.errors import LabelError


@dataclass(frozen=True)
class LabelSets:
    """
    Goal and unsafe location ids; the two sets are disjoint.
    """

    goal: frozenset[int]
    unsafe: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "goal", frozenset(int(s) for s in self.goal))
        object.__setattr__(self, "unsafe", frozenset(int(s) for s in self.unsafe))
        overlap = self.goal & self.unsafe
        if overlap:
            raise LabelError(
                f"locations {sorted(overlap)[:10]} are labeled both goal and unsafe"
            )

    def label_of(self, location: int) -> str:
        if location in self.goal:
            return "goal"
        if location in self.unsafe:
            return "unsafe"
        return "none"
