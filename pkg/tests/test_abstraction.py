import numpy as np
import pytest
from abstraction import (
    action_targets,
    backward_set_single,
    backward_set_two_layer,
    build_action_set,
    build_backward_sets,
    build_partition,
    enabled_actions,
    label_locations,
    locate,
    locate_many,
    zero_input_state,
)
from dynamics import LQRWeights, LinearSystem, make_stabilized, solve_dare
from geometry import HalfspacePolytope, HyperRectangle, contains_point, contains_points
from utils.errors import GeometryError, LabelError


@pytest.fixture
def line_partition():
    return build_partition(HyperRectangle([-2.0], [2.0]), [4])


@pytest.fixture
def integrator_partition():
    return build_partition(HyperRectangle([-41.0, -41.0], [41.0, 41.0]), [41, 41])


def test_integrator_partition_sizes(integrator_partition):
    assert integrator_partition.region_count == 1681
    assert integrator_partition.sink_id == 1681
    np.testing.assert_allclose(integrator_partition.width, [2.0, 2.0])


def test_single_region_partition():
    partition = build_partition(HyperRectangle([0.0], [1.0]), [1])
    assert partition.location_count == 2
    region = partition.region(0)
    assert region.lower[0] == 0.0 and region.upper[0] == 1.0


def test_line_partition_regions(line_partition):
    lower, upper = line_partition.bounds
    np.testing.assert_allclose(lower[:, 0], [-2, -1, 0, 1])
    np.testing.assert_allclose(upper[:, 0], [-1, 0, 1, 2])


def test_partition_rejects_bad_counts():
    with pytest.raises(GeometryError):
        build_partition(HyperRectangle([0.0], [1.0]), [0])


def test_locate_examples(line_partition):
    assert locate(line_partition, [-1.5]) == 0
    assert locate(line_partition, [-1.0]) == 1
    assert locate(line_partition, [2.0]) == 3
    assert locate(line_partition, [2.5]) == line_partition.sink_id


def test_locate_many_matches_region_boxes(integrator_partition):
    rng = np.random.default_rng(7)
    points = rng.uniform(-40.9, 40.9, size=(2000, 2))
    ids = locate_many(integrator_partition, points)
    for x, s in zip(points[:200], ids[:200]):
        assert integrator_partition.region(int(s)).contains_point(x)


def test_backward_set_single_shift():
    box = HalfspacePolytope.from_box([-1, -1], [1, 1])
    system = LinearSystem(A=np.eye(2), B=np.eye(2), input_set=box)
    at_origin = backward_set_single(system, [0.0, 0.0])
    shifted = backward_set_single(system, [2.0, 0.0])
    assert contains_point(at_origin, [1.0, -1.0]) and not contains_point(at_origin, [1.1, 0.0])
    assert contains_point(shifted, [3.0, 1.0]) and contains_point(shifted, [1.0, -1.0])
    assert not contains_point(shifted, [0.9, 0.0])


def test_backward_set_matches_grid_image_oracle(integrator):
    partition = build_partition(HyperRectangle([-41.0, -41.0], [41.0, 41.0]), [41, 41])
    target = partition.centers[900]
    polytope = backward_set_single(integrator, target)

    # Image of a grid over U under u -> A^-1 (d - B u)
    grid = np.linspace(-60.0, 60.0, 50)
    inputs = np.array(np.meshgrid(grid, grid)).reshape(2, -1).T
    states = np.linalg.solve(integrator.A, (target - inputs @ integrator.B.T).T).T
    assert contains_points(polytope, states).all()

    # Every member state needs an input inside U
    rng = np.random.default_rng(2)
    points = rng.uniform(-120.0, 120.0, size=(10_000, 2))
    B_inv = np.linalg.inv(integrator.B)
    needed = (target - points @ integrator.A.T) @ B_inv.T
    oracle = np.all(np.abs(needed) <= 60.0, axis=1)
    margin = np.abs(np.abs(needed).max(axis=1) - 60.0) > 1e-6
    assert (contains_points(polytope, points) == oracle)[margin].all()


def test_two_layer_scalar_example():
    system = LinearSystem(A=[[2.0]], B=[[1.0]], input_set=HalfspacePolytope.from_box([-6], [6]))
    stabilized = make_stabilized(
        system, [[1.5]], HalfspacePolytope.from_box([-1], [1]), HyperRectangle([-2], [2])
    )
    polytope = backward_set_two_layer(stabilized, [0.0])
    for x in np.linspace(-3.0, 3.0, 61):
        assert contains_point(polytope, [x]) == (abs(x) <= 2.0 + 1e-9)


def test_two_layer_zero_gain_equals_single_layer(integrator):
    stabilized = make_stabilized(
        integrator,
        np.zeros((2, 2)),
        HalfspacePolytope.unconstrained(2),
        HyperRectangle([-41.0, -41.0], [41.0, 41.0]),
    )
    target = np.array([3.0, -5.0])
    single = backward_set_single(integrator, target)
    double = backward_set_two_layer(stabilized, target)
    np.testing.assert_array_equal(single.constraint_matrix, double.constraint_matrix)
    np.testing.assert_array_equal(single.offset, double.offset)


def test_zero_input_state_inside_two_layer_set(integrator):
    domain = HyperRectangle([-41.0, -41.0], [41.0, 41.0])
    _, K = solve_dare(integrator.A, integrator.B, LQRWeights(np.eye(2), np.eye(2)))
    stabilized = make_stabilized(
        integrator, K, HalfspacePolytope.from_box([-10, -10], [10, 10]), domain
    )
    target = np.array([4.0, 2.0])
    witness = zero_input_state(stabilized, target)
    assert contains_point(backward_set_two_layer(stabilized, target), witness)


def test_enabled_actions_one_dimensional(line_partition):
    system = LinearSystem(A=[[1.0]], B=[[1.0]], input_set=HalfspacePolytope.from_box([-1], [1]))
    backward = backward_set_single(system, [-1.5])
    enabled = enabled_actions(line_partition, [backward]).toarray()
    assert enabled[:, 0].tolist() == [True, False, False, False, False]


def test_enabled_actions_whole_and_empty(line_partition):
    whole = HalfspacePolytope.from_box([-2.0], [2.0])
    enabled = enabled_actions(
        line_partition, [whole, HalfspacePolytope.empty(1), HalfspacePolytope.unconstrained(1)]
    ).toarray()
    assert enabled[:, 0].tolist() == [True] * 4 + [False]
    assert not enabled[:, 1].any()
    assert enabled[:, 2].tolist() == [True] * 4 + [False]


def test_action_set_lookups(line_partition):
    system = LinearSystem(A=[[1.0]], B=[[1.0]], input_set=HalfspacePolytope.from_box([-1], [1]))
    whole = HalfspacePolytope.from_box([-2.0], [2.0])
    backward_sets = [backward_set_single(system, [-1.5]), whole]
    actions = build_action_set(line_partition, [[-1.5], [0.5]], backward_sets)

    assert actions.action_count == 2
    assert actions.actions_at(0) == [0, 1]
    assert actions.actions_at(2) == [1]
    assert actions.actions_at(line_partition.sink_id) == []
    assert actions.enabled_pair_count() == 5

    with pytest.raises(ValueError):
        build_action_set(line_partition, [[-1.5]], backward_sets)


def test_two_layer_shrinks_enabled_relation(integrator, integrator_partition):
    targets = action_targets(integrator_partition)
    _, K = solve_dare(integrator.A, integrator.B, LQRWeights(np.eye(2), np.eye(2)))
    domain = integrator_partition.domain
    wide = make_stabilized(integrator, K, HalfspacePolytope.from_box([-20, -20], [20, 20]), domain)
    narrow = make_stabilized(integrator, K, HalfspacePolytope.from_box([-10, -10], [10, 10]), domain)

    wide_pairs = enabled_actions(integrator_partition, build_backward_sets(wide, targets))
    narrow_pairs = enabled_actions(integrator_partition, build_backward_sets(narrow, targets))
    assert narrow_pairs.nnz <= wide_pairs.nnz
    # Nested U' gives nested relations
    assert not (narrow_pairs.toarray() & ~wide_pairs.toarray()).any()


def test_goal_block_on_integrator_grid(integrator_partition):
    labels = label_locations(
        integrator_partition, [HyperRectangle([-3, -3], [3, 3])], [], avoid_complement=True
    )
    assert len(labels.goal) == 9
    for s in labels.goal:
        assert HyperRectangle([-3, -3], [3, 3]).contains_rect(integrator_partition.region(s))
    assert labels.unsafe == frozenset({integrator_partition.sink_id})


def test_half_covered_region_is_not_goal(line_partition):
    labels = label_locations(line_partition, [HyperRectangle([-0.5], [2.0])], [], True)
    assert labels.goal == frozenset({2, 3})


def test_avoid_overlap_is_conservative(line_partition):
    labels = label_locations(
        line_partition, [HyperRectangle([1.0], [2.0])], [HyperRectangle([-0.5], [-0.25])], False
    )
    assert labels.unsafe == frozenset({1})


def test_goal_avoid_overlap_raises(line_partition):
    with pytest.raises(LabelError):
        label_locations(
            line_partition, [HyperRectangle([0.0], [1.0])], [HyperRectangle([0.5], [0.75])], True
        )
