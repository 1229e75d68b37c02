from dataclasses import dataclass, field

from geometry import HyperRectangle


@dataclass(frozen=True)
class ReachAvoid:
    """
    Reach-avoid objective on the continuous state space.

    - goal: boxes whose union is X_G
    - avoid: boxes whose union is X_U inside X
    - domain: the partitioned region X
    - avoid_complement: whether leaving X counts as hitting X_U
    - horizon: number of controller steps
    """

    goal: tuple[HyperRectangle, ...]
    domain: HyperRectangle
    horizon: int
    avoid: tuple[HyperRectangle, ...] = field(default_factory=tuple)
    avoid_complement: bool = True

    def reached(self, x) -> bool:
        return any(box.contains_point(x) for box in self.goal)

    def violated(self, x) -> bool:
        if any(box.contains_point(x) for box in self.avoid):
            return True
        return self.avoid_complement and not self.domain.contains_point(x)
