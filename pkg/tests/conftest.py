import numpy as np
import pytest
from abstraction import LabelSets
from dynamics import LinearSystem
from geometry import HalfspacePolytope
from imdp import assemble_imdp
from scenario import IntervalTable, NoiseSource
from scipy import sparse

TOY_CONFIG = """
system:
  A: [[1.2]]
  B: [[1.0]]
noise:
  kind: gaussian
  mean: [0.0]
  covariance: [[0.01]]
input_set:
  box: {lower: [-3.0], upper: [3.0]}
partition: {lower: [-5.0], upper: [5.0], counts: [10]}
property:
  goal: [{lower: [-1.0], upper: [1.0]}]
  horizon: 4
  threshold: 0.9
scenario: {samples: 400, overall_confidence: 0.99, seed: 0}
simulate: {runs: 50, seed: 0, initial_states: [[2.5]]}
outputs: {directory: out/toy, export_model: true}
"""


@pytest.fixture
def toy_config_text() -> str:
    return TOY_CONFIG


@pytest.fixture
def unit_box() -> HalfspacePolytope:
    return HalfspacePolytope.from_box([-1.0, -1.0], [1.0, 1.0])


@pytest.fixture
def integrator() -> LinearSystem:
    return LinearSystem(
        A=[[1.5, 1.0], [0.0, 1.1]],
        B=[[1.25, 0.5], [1.0, 1.0]],
        input_set=HalfspacePolytope.from_box([-60.0, -60.0], [60.0, 60.0]),
        noise_source=NoiseSource.gaussian([0.0, 0.0], np.eye(2)),
    )


@pytest.fixture
def scalar_unstable() -> LinearSystem:
    return LinearSystem(
        A=[[2.0]],
        B=[[1.0]],
        input_set=HalfspacePolytope.from_box([-6.0], [6.0]),
    )


@pytest.fixture
def three_location_model():
    """
    Locations g (0, goal), u (1, unsafe), s (2). Action 0 is enabled at s with
    intervals g:[0.3, 0.6], u:[0.2, 0.5], s:[0.1, 0.3]; actions 1 and 2 are
    self-loops at g and u.
    """
    intervals = IntervalTable.from_rows(
        [
            {0: (0.3, 0.6), 1: (0.2, 0.5), 2: (0.1, 0.3)},
            {0: (1.0, 1.0)},
            {1: (1.0, 1.0)},
        ]
    )
    enabled = sparse.csr_matrix(
        np.array([[False, True, False], [False, False, True], [True, False, False]])
    )
    labels = LabelSets(goal=frozenset({0}), unsafe=frozenset({1}))
    return assemble_imdp(3, enabled, intervals, labels, 2)
