import numpy as np
import pytest
from dynamics import (
    LinearSystem,
    LQRWeights,
    check_controllability,
    clohessy_wiltshire,
    group_dynamics,
    grouped_horizon,
    make_stabilized,
    riccati_residual,
    solve_dare,
    spectral_radius,
    validate_gain,
)
from geometry import HalfspacePolytope, HyperRectangle
from scenario import NoiseSource
from scipy.linalg import solve_discrete_are
from utils.errors import AssumptionError, ConfigError, DimensionError

INTEGRATOR_DOMAIN = HyperRectangle([-41.0, -41.0], [41.0, 41.0])


def test_controllability_examples(integrator):
    assert check_controllability([[1, 1], [0, 1]], [[0], [1]])
    assert not check_controllability(np.eye(2), np.zeros((2, 1)))
    assert check_controllability(integrator.A, integrator.B)


def test_singular_state_matrix_names_assumption():
    with pytest.raises(AssumptionError, match="invertible dynamics"):
        LinearSystem(
            A=[[1.0, 0.0], [0.0, 0.0]],
            B=np.eye(2),
            input_set=HalfspacePolytope.from_box([-1, -1], [1, 1]),
        )


def test_uncontrollable_pair_names_assumption():
    with pytest.raises(AssumptionError, match="controllability"):
        LinearSystem(
            A=np.eye(2), B=[[1.0], [0.0]], input_set=HalfspacePolytope.from_box([-1], [1])
        )


def test_input_set_dimension_checked():
    with pytest.raises(DimensionError):
        LinearSystem(A=np.eye(2), B=np.eye(2), input_set=HalfspacePolytope.from_box([-1], [1]))


def test_scalar_dare():
    P, K = solve_dare([[1.0]], [[1.0]], LQRWeights([[1.0]], [[1.0]]))
    assert P[0, 0] == pytest.approx((1 + np.sqrt(5)) / 2, abs=1e-6)
    assert K[0, 0] == pytest.approx(0.6180340, abs=1e-6)


def test_dare_zero_state_matrix():
    P, K = solve_dare([[0.0]], [[1.0]], LQRWeights([[1.0]], [[1.0]]))
    assert P[0, 0] == pytest.approx(1.0)
    assert K[0, 0] == pytest.approx(0.0)


def test_integrator_lqr_stabilizes(integrator):
    weights = LQRWeights(np.eye(2), np.eye(2))
    P, K = solve_dare(integrator.A, integrator.B, weights)
    assert spectral_radius(integrator.A - integrator.B @ K) < 1.0
    assert riccati_residual(integrator.A, integrator.B, weights, P) < 1e-8
    np.testing.assert_allclose(
        P, solve_discrete_are(integrator.A, integrator.B, np.eye(2), np.eye(2)), atol=1e-7
    )


def test_lqr_weights_validation():
    with pytest.raises(AssumptionError):
        LQRWeights(np.eye(2), np.zeros((2, 2)))
    with pytest.raises(DimensionError):
        LQRWeights([[1.0, 2.0], [0.0, 1.0]], np.eye(2))


def test_validate_gain_zero_is_ok(integrator):
    assert validate_gain(integrator, np.zeros((2, 2)), INTEGRATOR_DOMAIN).ok


def test_validate_gain_reports_vertex(integrator):
    result = validate_gain(integrator, np.eye(2), HyperRectangle([-100, -100], [100, 100]))
    assert not result.ok
    assert result.vertex == (100.0, 100.0)


def test_validate_gain_integrator_lqr(integrator):
    _, K = solve_dare(integrator.A, integrator.B, LQRWeights(np.eye(2), np.eye(2)))
    result = validate_gain(integrator, K, INTEGRATOR_DOMAIN)
    assert result.ok or result.vertex is not None


def test_make_stabilized_scalar():
    system = LinearSystem(A=[[2.0]], B=[[1.0]], input_set=HalfspacePolytope.from_box([-6], [6]))
    stabilized = make_stabilized(
        system, [[1.5]], HalfspacePolytope.from_box([-1], [1]), HyperRectangle([-2], [2])
    )
    assert stabilized.A_cl[0, 0] == pytest.approx(0.5)


def test_make_stabilized_zero_gain_keeps_dynamics(integrator):
    stabilized = make_stabilized(
        integrator,
        np.zeros((2, 2)),
        HalfspacePolytope.unconstrained(2),
        INTEGRATOR_DOMAIN,
    )
    np.testing.assert_array_equal(stabilized.A_cl, integrator.A)


def test_closed_loop_step_equals_open_loop_step(integrator):
    # |K x| <= 10.7 on the domain vertices, inside U = [-60, 60]^2
    K = 0.1 * np.linalg.solve(integrator.B, integrator.A)
    stabilized = make_stabilized(
        integrator, K, HalfspacePolytope.from_box([-20, -20], [20, 20]), INTEGRATOR_DOMAIN
    )
    rng = np.random.default_rng(11)
    for x, u_prime in zip(rng.uniform(-41, 41, (20, 2)), rng.uniform(-20, 20, (20, 2))):
        closed = stabilized.A_cl @ x + integrator.B @ u_prime
        opened = integrator.A @ x + integrator.B @ (-K @ x + u_prime)
        np.testing.assert_allclose(closed, opened, atol=1e-9)


def test_make_stabilized_requires_origin_in_abstract_set(integrator):
    with pytest.raises(AssumptionError, match="abstract input origin"):
        make_stabilized(
            integrator,
            np.zeros((2, 2)),
            HalfspacePolytope.from_box([1.0, 1.0], [2.0, 2.0]),
            INTEGRATOR_DOMAIN,
        )


def test_make_stabilized_rejects_inadmissible_gain(integrator):
    with pytest.raises(AssumptionError, match="admissible gain"):
        make_stabilized(
            integrator,
            np.eye(2) * 2.0,
            HalfspacePolytope.unconstrained(2),
            INTEGRATOR_DOMAIN,
        )


def test_group_dynamics_identity(integrator):
    assert group_dynamics(integrator, 1) is integrator


def test_group_dynamics_double_integrator():
    system = LinearSystem(
        A=[[1.0, 1.0], [0.0, 1.0]],
        B=[[0.0], [1.0]],
        input_set=HalfspacePolytope.from_box([-1], [1]),
        noise_source=NoiseSource.gaussian([0.0, 0.0], np.eye(2)),
    )
    grouped = group_dynamics(system, 2)
    np.testing.assert_allclose(grouped.A, [[1, 2], [0, 1]])
    np.testing.assert_allclose(grouped.B, [[1, 0], [1, 1]])
    assert np.linalg.det(grouped.B) == pytest.approx(1.0)
    assert grouped.grouping == 2
    assert grouped.input_set.dimension == 2
    assert grouped.noise_source.kind == "lumped"


def test_group_dynamics_spacecraft_is_square_and_invertible():
    A, B = clohessy_wiltshire(0.05, 1.0)
    system = LinearSystem(A=A, B=B, input_set=HalfspacePolytope.from_box([-0.1] * 2, [0.1] * 2))
    grouped = group_dynamics(system, 2)
    assert grouped.B.shape == (4, 4)
    assert abs(np.linalg.det(grouped.B)) > 1e-6


def test_grouped_step_matches_base_steps():
    A, B = clohessy_wiltshire(0.05, 1.0)
    rng = np.random.default_rng(3)
    recorded = rng.normal(scale=0.01, size=(10, 4))
    system = LinearSystem(
        A=A,
        B=B,
        input_set=HalfspacePolytope.from_box([-0.1] * 2, [0.1] * 2),
        noise_source=NoiseSource.from_samples(recorded),
    )
    grouped = group_dynamics(system, 2)
    lumped = grouped.noise_source.take(5)

    for i in range(5):
        x = rng.uniform(-1.0, 1.0, size=4)
        inputs = rng.uniform(-0.1, 0.1, size=(2, 2))
        stepped = x
        for k in range(2):
            stepped = A @ stepped + B @ inputs[k] + recorded[2 * i + k]
        jumped = grouped.A @ x + grouped.B @ inputs.reshape(-1) + lumped[i]
        np.testing.assert_allclose(jumped, stepped, atol=1e-12)


def test_group_dynamics_rejects_non_square_grouping(integrator):
    with pytest.raises(DimensionError):
        group_dynamics(integrator, 2)


def test_grouped_horizon():
    assert grouped_horizon(16, 2) == 8
    with pytest.raises(ConfigError):
        grouped_horizon(15, 2)


def test_clohessy_wiltshire_limits():
    A, B = clohessy_wiltshire(0.0, 1.0)
    np.testing.assert_allclose(A, [[1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0], [0, 0, 0, 1]])
    np.testing.assert_allclose(B, [[0.5, 0], [0, 0.5], [1, 0], [0, 1]])


def test_lumped_noise_draws_sum_of_powers():
    base = NoiseSource.from_samples([[1.0, 0.0], [0.0, 1.0]])
    lumped = base.lumped([[1.0, 1.0], [0.0, 1.0]], 2)
    # A e1 + e2 from the first two recorded rows
    np.testing.assert_allclose(lumped.take(1), [[1.0, 1.0]])
