from dataclasses import asdict, dataclass, field
from typing import List, Optional

import numpy as np
from geometry import HalfspacePolytope, HyperRectangle


@dataclass
class SetSpec:
    """
    Polytope given either as a box or in halfspace form.

    - lower, upper: box corners (box form)
    - matrix, offset: C and d of {x : C x <= d} (halfspace form)
    """

    lower: Optional[List[float]] = None
    upper: Optional[List[float]] = None
    matrix: Optional[List[List[float]]] = None
    offset: Optional[List[float]] = None

    @property
    def is_box(self) -> bool:
        return self.lower is not None

    def to_polytope(self) -> HalfspacePolytope:
        if self.is_box:
            return HalfspacePolytope.from_box(self.lower, self.upper)
        return HalfspacePolytope(np.array(self.matrix, dtype=float, ndmin=2), self.offset)

    def to_dict(self) -> dict:
        if self.is_box:
            return {"box": {"lower": self.lower, "upper": self.upper}}
        return {"halfspaces": {"matrix": self.matrix, "offset": self.offset}}


@dataclass
class SystemSection:
    """
    - A, B: row-major matrices (resolved from the model builder when one is named)
    - model: builder name, e.g. "clohessy_wiltshire"
    - parameters: builder arguments
    """

    A: List[List[float]]
    B: List[List[float]]
    model: Optional[str] = None
    parameters: dict = field(default_factory=dict)

    @property
    def state_dim(self) -> int:
        return len(self.A)

    @property
    def input_dim(self) -> int:
        return len(self.B[0])

    def to_dict(self) -> dict:
        if self.model:
            return {"model": self.model, **self.parameters}
        return {"A": self.A, "B": self.B}


@dataclass
class NoiseSection:
    """
    - kind: "gaussian" or "file"
    - mean, covariance: Gaussian parameters
    - path: sample file for recorded noise
    """

    kind: str
    mean: Optional[List[float]] = None
    covariance: Optional[List[List[float]]] = None
    path: Optional[str] = None

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


@dataclass
class TwoLayerSection:
    """
    - enabled: whether the stabilizing layer is used
    - gain: explicit K, or None to compute an LQR gain from Q and R
    - Q, R: LQR weights
    - abstract_input_set: U', None for unconstrained
    """

    enabled: bool = False
    gain: Optional[List[List[float]]] = None
    Q: Optional[List[List[float]]] = None
    R: Optional[List[List[float]]] = None
    abstract_input_set: Optional[SetSpec] = None

    def to_dict(self) -> dict:
        if self.gain is not None:
            gain = {"matrix": self.gain}
        elif self.Q is not None:
            gain = {"lqr": {"Q": self.Q, "R": self.R}}
        else:
            gain = None
        return {
            "enabled": self.enabled,
            "gain": gain,
            "abstract_input_set": (
                self.abstract_input_set.to_dict() if self.abstract_input_set else None
            ),
        }


@dataclass
class PartitionSection:
    lower: List[float]
    upper: List[float]
    counts: List[int]

    @property
    def domain(self) -> HyperRectangle:
        return HyperRectangle(self.lower, self.upper)


@dataclass
class PropertySection:
    """
    - goal, avoid: lists of {lower, upper} boxes
    - avoid_complement: whether leaving X is unsafe
    - horizon: H in base steps
    - threshold: rho in [0, 1]
    """

    goal: List[dict]
    horizon: int
    threshold: float
    avoid: List[dict] = field(default_factory=list)
    avoid_complement: bool = True

    @property
    def goal_boxes(self) -> list[HyperRectangle]:
        return [HyperRectangle.from_dict(box) for box in self.goal]

    @property
    def avoid_boxes(self) -> list[HyperRectangle]:
        return [HyperRectangle.from_dict(box) for box in self.avoid]


@dataclass
class ScenarioSection:
    samples: int
    overall_confidence: float
    seed: int = 0


@dataclass
class SimulateSection:
    runs: int
    seed: int = 0
    initial_states: List[List[float]] = field(default_factory=list)


@dataclass
class OutputsSection:
    directory: str
    export_model: bool = False
    record_timings: bool = False


@dataclass
class RunConfig:
    """
    A fully validated run document.

    - system, noise, input_set: the stochastic linear system
    - two_layer: stabilizing layer settings
    - grouping: steps lumped into one abstraction step
    - partition, property: abstraction grid and reach-avoid objective
    - scenario, simulate, outputs: sampling, validation and report settings
    """

    system: SystemSection
    noise: NoiseSection
    input_set: SetSpec
    partition: PartitionSection
    property: PropertySection
    scenario: ScenarioSection
    simulate: SimulateSection
    outputs: OutputsSection
    two_layer: TwoLayerSection = field(default_factory=TwoLayerSection)
    grouping: int = 1

    def to_dict(self) -> dict:
        """
        Convert the config back into a document accepted by parse_config.

        Returns:
            dict: Plain nested dictionary
        """
        return {
            "system": self.system.to_dict(),
            "noise": self.noise.to_dict(),
            "input_set": self.input_set.to_dict(),
            "two_layer": self.two_layer.to_dict(),
            "grouping": self.grouping,
            "partition": asdict(self.partition),
            "property": asdict(self.property),
            "scenario": asdict(self.scenario),
            "simulate": asdict(self.simulate),
            "outputs": asdict(self.outputs),
        }
