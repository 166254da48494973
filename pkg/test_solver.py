#!/usr/bin/env python3
"""
Tests for the interior and edge equilibrium solvers and the printed values.
"""

import math

import numpy as np
import pytest

from core.catalog import PointInB, build_simplex, find_action, instantiate, load_catalog
from core.errors import MissingGoldenError, NoConvergenceError, OutsideDomainError
from core.field import field_at
from core.oracle import sample_interior
from core.solver import (
    EquilibriumKind,
    EquilibriumSolver,
    SolverSettings,
    find_edge_equilibria,
    find_interior_equilibrium,
    reproduce_table31,
    solve_all,
)
from core.status import CheckStatus

SQRT3 = math.sqrt(3.0)
ALL_IDS = [action.id for action in load_catalog()]
GOLDEN_IDS = [action.id for action in load_catalog() if action.table31 is not None]


def _assert_same_points(found, expected, tol):
    remaining = list(expected)
    for point in found:
        match = min(remaining, key=lambda target: math.hypot(point.x1 - target[0], point.x2 - target[1]))
        assert abs(point.x1 - match[0]) <= tol and abs(point.x2 - match[1]) <= tol, (point, match)
        remaining.remove(match)


@pytest.mark.parametrize("action_id,expected", [
    ("rho1_SO3_SU3_SO3", (math.pi / 6, 0.0)),
    ("rho8_Sp2_Sp2Sp2_Sp2", (math.pi / 6, math.pi / 6)),
])
def test_closed_form_interior_equilibria(action_id, expected):
    result = find_interior_equilibrium(find_action(action_id))
    assert result.converged
    assert result.kind == EquilibriumKind.INTERIOR
    assert result.location.x1 == pytest.approx(expected[0], abs=1e-10)
    assert result.location.x2 == pytest.approx(expected[1], abs=1e-10)
    assert result.residual < 1e-12


def test_rho1_edge_equilibria(rho1):
    results = find_edge_equilibria(rho1)
    assert [result.edge_index for result in results] == [0, 1, 2]
    assert all(result.kind == EquilibriumKind.EDGE for result in results)
    expected = [(0.0, 0.0), (math.pi / 4, -math.pi / (4 * SQRT3)), (math.pi / 4, math.pi / (4 * SQRT3))]
    _assert_same_points([result.location for result in results], expected, 1e-9)


def test_so6_edge_equilibria(so6):
    results = find_edge_equilibria(so6)
    expected = [(0.0, math.pi / (4 * SQRT3)), (math.pi / 8, math.pi / (8 * SQRT3)),
                (math.pi / 8, 3 * math.pi / (8 * SQRT3))]
    _assert_same_points([result.location for result in results], expected, 1e-9)


@pytest.mark.parametrize("action_id", ALL_IDS)
def test_interior_equilibrium_is_a_zero(action_id):
    action = find_action(action_id)
    interior, edges = solve_all(action)
    simplex = build_simplex(action)
    assert simplex.clearance(interior.location) > 0.0
    assert np.hypot(*field_at(action, interior.location).vector) < 1e-10
    assert len(edges) == 3
    for result in edges:
        assert simplex.contains(result.location)
        if result.kind == EquilibriumKind.VERTEX:
            assert result.location == simplex.vertices[result.index]


@pytest.mark.parametrize("action_id", GOLDEN_IDS)
def test_printed_equilibria(action_id):
    comparison = reproduce_table31(find_action(action_id))
    assert comparison.records
    for record in comparison.records:
        if record.note is None:
            assert record.status == CheckStatus.PASS, (record.label, record.deviation)
        else:
            assert record.status in (CheckStatus.PASS, CheckStatus.FLAGGED)


@pytest.mark.parametrize("action_id,expected", [
    ("SO6_SU6_Sp3", (0.261799, 0.45345)),
    ("SU2U2_SU4_SU2U2_nonisotropy", (0.477658, 0.477658)),
    ("rho3_SO4SO4_SO8_U4", (0.553574, 0.553574)),
    ("rho5_U5_SO10_U5", (0.622334, 0.234738)),
])
def test_decimal_interior_values(action_id, expected):
    location = find_interior_equilibrium(find_action(action_id)).location
    assert location.x1 == pytest.approx(expected[0], abs=1e-4)
    assert location.x2 == pytest.approx(expected[1], abs=1e-4)


def test_so6_interior_is_pi_over_twelve(so6):
    location = find_interior_equilibrium(so6).location
    assert location.x1 == pytest.approx(math.pi / 12, abs=1e-10)
    assert location.x2 == pytest.approx(SQRT3 * math.pi / 12, abs=1e-10)


def test_missing_golden_raises():
    with pytest.raises(MissingGoldenError):
        reproduce_table31(find_action("rho9_Sp2_Sp2Sp2_Sp2"))


@pytest.mark.parametrize("action_id", ALL_IDS)
def test_newton_agrees_from_many_seeds(action_id):
    action = find_action(action_id)
    solver = EquilibriumSolver()
    reference = solver.interior(action).location
    for seed in sample_interior(action, 20, shrink=0.9):
        location = solver.interior(action, seed=seed).location
        assert location.distance_to(reference) < 1e-8


def test_no_second_zero_on_a_fine_grid(rho1):
    simplex = build_simplex(rho1)
    x_min, x_max, y_min, y_max = simplex.bounding_box()
    xs, ys = np.meshgrid(np.linspace(x_min, x_max, 200), np.linspace(y_min, y_max, 200), indexing="ij")
    cell = max((x_max - x_min), (y_max - y_min)) / 199
    equilibrium = find_interior_equilibrium(rho1).location
    for x1, x2 in zip(xs.ravel(), ys.ravel()):
        point = PointInB(x1, x2)
        if simplex.clearance(point) <= 0.05:
            continue
        norm = np.hypot(*field_at(rho1, point).vector)
        # the Jacobian is at least 8 near the zero, so |X| grows at least linearly away from it
        if point.distance_to(equilibrium) > 2 * cell:
            assert norm > 1e-3


def test_seed_outside_simplex_is_rejected(rho1):
    with pytest.raises(OutsideDomainError):
        EquilibriumSolver().interior(rho1, seed=PointInB(0.0, 0.0))


def test_iteration_budget_exhaustion(rho1):
    settings = SolverSettings(max_iter=1)
    with pytest.raises(NoConvergenceError) as info:
        EquilibriumSolver(settings).interior(rho1, seed=PointInB(0.05, 0.0))
    assert info.value.iterations == 1


def test_parametric_instance_solves():
    instance = instantiate(find_action("SOq2_SUq2_SU2Uq"), q=6)
    result = find_interior_equilibrium(instance)
    assert result.converged


@pytest.mark.parametrize("q, j", [(5, 2), (6, 2)])
def test_parameter_swap_mirrors_the_interior_equilibrium(q, j):
    base = find_action("SOj1SOqj1_SOq2_SO2SOq")
    first = find_interior_equilibrium(instantiate(base, q=q, j=j)).location
    second = find_interior_equilibrium(instantiate(base, q=q, j=q - j)).location
    assert second.x1 == pytest.approx(first.x2, abs=1e-10)
    assert second.x2 == pytest.approx(first.x1, abs=1e-10)
