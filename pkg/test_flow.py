#!/usr/bin/env python3
"""
Tests for the adaptive flow integrator and the collapse diagnostics.
"""

import math

import numpy as np
import pytest

from core.catalog import PointInB, build_simplex, find_action, instantiate, load_catalog
from core.errors import NotCollapsedError, OutsideDomainError, StepCollapseError
from core.field import field_at
from core.flow import (
    EmbeddedRungeKutta,
    FlowIntegrator,
    FlowParameters,
    FlowSample,
    Stratum,
    TerminationKind,
    Trajectory,
    collapse_diagnostics,
    estimate_collapse_time,
    integrate_flow,
    limit_stratum,
)
from core.solver import find_interior_equilibrium

SQRT3 = math.sqrt(3.0)

# one row per root-system kind plus parametric instances
REPRESENTATIVES = [
    ("rho1_SO3_SU3_SO3", {}),
    ("rho3_SO4SO4_SO8_U4", {}),
    ("rho5_U5_SO10_U5", {}),
    ("rho16_G2_G2G2_G2", {}),
    ("SOq2_SUq2_SU2Uq", {"q": 5}),
    ("SOj1SOqj1_SOq2_SO2SOq", {"q": 5, "j": 2}),
]


def _representative(action_id, params):
    action = find_action(action_id)
    return instantiate(action, **params) if params else action


def test_runge_kutta_pair_on_exponential_decay():
    stepper = EmbeddedRungeKutta(rtol=1e-10, atol=1e-10)
    y, error = stepper.step(lambda y: -y, np.array([1.0, 2.0]), 0.01)
    np.testing.assert_allclose(y, np.exp(-0.01) * np.array([1.0, 2.0]), rtol=1e-10)
    assert error >= 0.0
    assert stepper.next_step(0.01, 0.0) == pytest.approx(0.05)
    assert stepper.next_step(0.01, 1e6) == pytest.approx(0.002)


def test_axis_trajectory_collapses_to_an_edge(rho1):
    trajectory = integrate_flow(rho1, PointInB(0.3, 0.0))
    assert trajectory.termination.kind == TerminationKind.WALL_CONTACT
    assert str(trajectory.termination.stratum) == "edge 0"
    assert trajectory.final.point.x1 < 1e-5
    assert all(abs(sample.point.x2) <= 1e-12 for sample in trajectory.samples)

    phis = [sample.phi for sample in trajectory.samples]
    assert all(later < earlier for earlier, later in zip(phis, phis[1:]))
    assert trajectory.collapse_time_estimate >= trajectory.final.t

    diagnostics = collapse_diagnostics(rho1, trajectory)
    assert diagnostics.collapse_time >= trajectory.final.t
    assert str(diagnostics.stratum) == "edge 0"
    assert math.isfinite(diagnostics.statistic) and diagnostics.statistic > 0.0


def test_axis_trajectory_towards_the_far_vertex(rho1):
    trajectory = integrate_flow(rho1, PointInB(0.7, 0.0))
    assert trajectory.termination.kind == TerminationKind.WALL_CONTACT
    assert str(trajectory.termination.stratum) == "vertex 2"


@pytest.mark.parametrize("action_id, params", REPRESENTATIVES)
def test_grid_starts_all_reach_a_wall(action_id, params):
    action = _representative(action_id, params)
    simplex = build_simplex(action)
    equilibrium = find_interior_equilibrium(action).location
    x_min, x_max, y_min, y_max = simplex.bounding_box()
    started = 0
    for x1 in np.linspace(x_min, x_max, 7)[1:-1]:
        for x2 in np.linspace(y_min, y_max, 7)[1:-1]:
            start = PointInB(x1, x2)
            if simplex.clearance(start) <= 1e-3 or start.distance_to(equilibrium) < 0.05:
                continue
            trajectory = integrate_flow(action, start)
            started += 1
            assert trajectory.termination.kind == TerminationKind.WALL_CONTACT, f"{action.id} from {start}"
            assert trajectory.final.t < 50.0
            phis = [sample.phi for sample in trajectory.samples]
            assert all(later < earlier + 1e-12 * max(1.0, abs(earlier))
                       for earlier, later in zip(phis, phis[1:]))
    assert started >= 3


@pytest.mark.parametrize("action_id, params", REPRESENTATIVES)
def test_edge_starts_stay_on_their_edge(action_id, params):
    action = _representative(action_id, params)
    for edge in build_simplex(action).edges:
        trajectory = integrate_flow(action, edge.point_at(0.4 * edge.length))
        assert trajectory.edge_index == edge.index
        assert trajectory.termination.kind in (TerminationKind.WALL_CONTACT, TerminationKind.EQUILIBRIUM)
        if trajectory.termination.kind == TerminationKind.WALL_CONTACT:
            assert trajectory.termination.stratum.kind == "vertex"
        assert all(abs(edge.wall.distance(sample.point)) < 1e-9 for sample in trajectory.samples)

def test_edge_start_stays_on_the_edge(rho1):
    trajectory = integrate_flow(rho1, PointInB(0.0, 0.3))
    assert trajectory.edge_index == 0
    assert trajectory.termination.kind == TerminationKind.WALL_CONTACT
    assert str(trajectory.termination.stratum) == "vertex 1"
    assert all(abs(sample.point.x1) <= 1e-9 for sample in trajectory.samples)
    assert all(math.isnan(sample.phi) for sample in trajectory.samples)


def test_equilibrium_start_is_stationary(rho1):
    trajectory = integrate_flow(rho1, PointInB(math.pi / 6, 0.0))
    assert trajectory.termination.kind == TerminationKind.EQUILIBRIUM
    assert len(trajectory) == 1


def test_vertex_start_is_stationary(rho1):
    trajectory = integrate_flow(rho1, PointInB(math.pi / 2, 0.0))
    assert trajectory.termination.kind == TerminationKind.EQUILIBRIUM
    assert str(trajectory.termination.stratum) == "vertex 2"


def test_reversed_flow_approaches_the_equilibrium(rho1):
    params = FlowParameters(t_max=2.0)
    trajectory = FlowIntegrator(params).integrate(rho1, PointInB(0.3, 0.1), direction=-1)
    assert trajectory.termination.kind in (TerminationKind.EQUILIBRIUM, TerminationKind.MAX_TIME)
    assert trajectory.final.point.distance_to(PointInB(math.pi / 6, 0.0)) < 1e-3
    phis = [sample.phi for sample in trajectory.samples]
    assert all(later >= earlier for earlier, later in zip(phis, phis[1:]))


def test_max_time_stops_exactly_at_t_max(rho1):
    params = FlowParameters(t_max=1e-3)
    trajectory = FlowIntegrator(params).integrate(rho1, PointInB(0.45, 0.05))
    assert trajectory.termination.kind == TerminationKind.MAX_TIME
    assert trajectory.final.t == 1e-3
    with pytest.raises(NotCollapsedError):
        collapse_diagnostics(rho1, trajectory)


def test_step_budget_exhaustion(rho1):
    params = FlowParameters(max_steps=3, initial_step=1e-8)
    with pytest.raises(StepCollapseError) as info:
        FlowIntegrator(params).integrate(rho1, PointInB(0.3, 0.1))
    assert info.value.trajectory is not None


def test_invalid_starts(rho1):
    with pytest.raises(OutsideDomainError):
        integrate_flow(rho1, PointInB(-0.2, 0.0))
    with pytest.raises(ValueError):
        integrate_flow(rho1, PointInB(0.3, 0.0), direction=2)


def test_non_tangent_edge_records_normal_component():
    action = find_action("rho4_U4_SO8_U4")
    trajectory = integrate_flow(action, PointInB(math.pi / 8, 3 * math.pi / 8))
    assert trajectory.edge_index is not None
    assert any(abs(sample.normal_component) > 1e-3 for sample in trajectory.samples)


def test_limit_stratum_near_a_vertex(rho1):
    simplex = build_simplex(rho1)
    assert str(limit_stratum(simplex, PointInB(1e-8, 0.0), 1e-6)) == "edge 0"
    corner = PointInB(1e-8, -math.pi / (2 * SQRT3) + 2e-8)
    assert str(limit_stratum(simplex, corner, 1e-6)) == "vertex 0"


def test_runge_kutta_pair_is_fourth_order():
    stepper = EmbeddedRungeKutta(rtol=1e-10, atol=1e-10)
    exact = np.array([math.cos(1.0), math.sin(1.0)])

    def endpoint_error(steps):
        y = np.array([1.0, 0.0])
        for _ in range(steps):
            y, _ = stepper.step(lambda z: np.array([-z[1], z[0]]), y, 1.0 / steps)
        return float(np.linalg.norm(y - exact))

    ratio = endpoint_error(8) / endpoint_error(16)
    assert 16.0 / 4.0 < ratio < 16.0 * 4.0


def _near_wall_points(action):
    """Points 1e-3 inside an edge and more than 0.3 away from the other edges."""
    simplex = build_simplex(action)
    for edge in simplex.edges:
        inward = edge.wall.inward_normal
        candidates = [PointInB.from_array(edge.point_at(fraction * edge.length).as_array() + 1e-3 * inward)
                      for fraction in np.linspace(0.05, 0.95, 19)]
        best = max(candidates, key=lambda p: simplex.wall_distance(p, exclude=edge.coincident_walls))
        if simplex.wall_distance(best, exclude=edge.coincident_walls) > 0.3:
            yield edge, best


def test_field_drives_towards_a_nearby_wall():
    checked = 0
    for action in load_catalog():
        for edge, point in _near_wall_points(action):
            drive = float(field_at(action, point).vector @ edge.wall.inward_normal)
            assert drive < 0.0, f"{action.id} near {edge}"
            checked += 1
    assert checked > 0


@pytest.mark.parametrize("action_id, params", REPRESENTATIVES)
def test_flow_near_a_wall_collapses_and_reverses(action_id, params):
    action = _representative(action_id, params)
    for edge, point in _near_wall_points(action):
        start = edge.wall.distance(point)

        forward = integrate_flow(action, point)
        assert forward.termination.kind == TerminationKind.WALL_CONTACT
        assert forward.termination.stratum == Stratum("edge", edge.index)
        assert edge.wall.distance(forward.final.point) < start

        backward = FlowIntegrator(FlowParameters(t_max=1e-7)).integrate(action, point, direction=-1)
        distances = [edge.wall.distance(sample.point) for sample in backward.samples]
        assert all(later > earlier for earlier, later in zip(distances, distances[1:]))
        assert distances[-1] > start


def test_type_one_statistic_towards_the_far_vertex(rho1):
    trajectory = integrate_flow(rho1, PointInB(math.pi / 4, 0.0))
    xs = [sample.point.x1 for sample in trajectory.samples]
    assert all(later > earlier for earlier, later in zip(xs, xs[1:]))
    assert str(trajectory.termination) == "WALL_CONTACT(vertex 2)"

    diagnostics = collapse_diagnostics(rho1, trajectory)
    assert str(diagnostics.stratum) == "vertex 2"
    assert trajectory.final.t <= diagnostics.collapse_time < 50.0
    assert diagnostics.statistic_series
    assert diagnostics.statistic == max(value for _, value in diagnostics.statistic_series)
    assert 0.0 < diagnostics.statistic < math.inf
    assert isinstance(diagnostics.bounded, bool)


def test_collapse_time_fit_on_square_root_distance():
    samples = [FlowSample(t, PointInB(0.1, 0.0), 1.0, 0.0, 0.5 * math.sqrt(2.0 - t))
               for t in np.linspace(0.0, 1.9, 20)]
    trajectory = Trajectory("synthetic", samples)
    assert estimate_collapse_time(trajectory) == pytest.approx(2.0, rel=1e-9)
    assert estimate_collapse_time(trajectory, window=1) == pytest.approx(1.9)
