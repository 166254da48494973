"""
Equilibrium Solver

This module locates the minimal orbits of an action: the unique interior zero
of the mean-curvature field and the zero of the boundary field on each closed
edge. It also compares the solutions against the printed equilibrium values
carried by the catalog.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from core.catalog import Edge, GoldenPoint, HermannActionSpec, OrbitSimplex, PointInB, build_simplex
from core.errors import MissingGoldenError, NoConvergenceError, OutsideDomainError, WallContactError
from core.field import WALL_EPS, field_at, jacobian, normal_component, potential
from core.status import CheckStatus


@dataclass(frozen=True)
class SolverSettings:
    """Tolerances and iteration budgets of the equilibrium solves."""

    newton_tol: float = 1e-12
    max_iter: int = 100
    max_halvings: int = 30
    edge_tol: float = 1e-12
    wall_eps: float = WALL_EPS

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "SolverSettings":
        solver = config.get("solver", {})
        return cls(
            newton_tol=float(solver.get("newton_tol", cls.newton_tol)),
            max_iter=int(solver.get("max_iter", cls.max_iter)),
            max_halvings=int(solver.get("max_halvings", cls.max_halvings)),
            edge_tol=float(solver.get("edge_tol", cls.edge_tol)),
            wall_eps=float(config.get("field", {}).get("wall_eps", cls.wall_eps)),
        )


class EquilibriumKind(Enum):
    INTERIOR = "interior"
    EDGE = "edge"
    VERTEX = "vertex"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EquilibriumResult:
    """
    A zero of the field or of a boundary field.

    ``index`` is the edge index for EDGE results and the vertex index for
    VERTEX results. ``edge_index`` names the edge an edge solve ran on.
    ``normal_residual`` is the normal part of the boundary field, nonzero
    only on edges where that field is not tangent.
    """

    location: PointInB
    residual: float
    iterations: int
    converged: bool
    kind: EquilibriumKind
    index: Optional[int] = None
    edge_index: Optional[int] = None
    normal_residual: float = 0.0

    @property
    def kind_label(self) -> str:
        if self.kind == EquilibriumKind.INTERIOR:
            return "interior"
        return f"{self.kind.value} {self.index}"

    def __str__(self) -> str:
        return f"{self.kind_label} at {self.location} (residual {self.residual:.3e})"


@dataclass(frozen=True)
class GoldenComparison:
    """One printed point against the nearest computed equilibrium."""

    label: str
    golden: GoldenPoint
    computed: PointInB
    deviation: float
    tolerance: float
    status: CheckStatus

    @property
    def note(self) -> Optional[str]:
        return self.golden.note


@dataclass
class Table31Comparison:
    """Printed equilibria of one action against the solver output."""

    action_id: str
    interior: Optional[GoldenComparison]
    edges: List[GoldenComparison] = field(default_factory=list)

    @property
    def records(self) -> List[GoldenComparison]:
        head = [self.interior] if self.interior is not None else []
        return head + list(self.edges)

    @property
    def status(self) -> CheckStatus:
        statuses = {record.status for record in self.records}
        if CheckStatus.FAIL in statuses:
            return CheckStatus.FAIL
        if CheckStatus.FLAGGED in statuses:
            return CheckStatus.FLAGGED
        return CheckStatus.PASS


class EquilibriumSolver:
    """
    Newton-type solver for the interior and edge equilibria of one action.

    The interior solve is Newton on the field with the analytic Jacobian,
    seeded at the incenter and damped by step halving so every iterate stays
    strictly inside the simplex without lowering the potential. Edge solves
    bracket the tangential field between the two vertices.
    """

    def __init__(self, settings: Optional[SolverSettings] = None):
        self.settings = settings or SolverSettings()
        self.logger = logging.getLogger(__name__)

    def interior(self, action: HermannActionSpec, seed: Optional[PointInB] = None,
                 simplex: Optional[OrbitSimplex] = None) -> EquilibriumResult:
        """
        Find the interior zero of the field, the maximizer of the potential.

        Args:
            action: Catalog row
            seed: Starting point, the incenter when omitted
            simplex: Prebuilt orbit simplex of the action

        Returns:
            Converged interior equilibrium

        Raises:
            NoConvergenceError: If the iteration budget or the damping is exhausted
        """
        settings = self.settings
        simplex = simplex or build_simplex(action)
        point = seed or simplex.incenter()
        if simplex.clearance(point) <= settings.wall_eps:
            raise OutsideDomainError(f"Seed {point} is not inside the orbit simplex of {action.id}")

        residual = math.inf
        for iteration in range(settings.max_iter + 1):
            vector = field_at(action, point, settings.wall_eps).vector
            residual = float(np.hypot(*vector))
            self.logger.debug(f"{action.id} newton {iteration}: {point} |X|={residual:.3e}")
            if residual < settings.newton_tol:
                self.logger.info(f"{action.id}: interior equilibrium {point} after {iteration} iterations")
                return EquilibriumResult(point, residual, iteration, True, EquilibriumKind.INTERIOR)
            if iteration == settings.max_iter:
                break

            step = np.linalg.solve(jacobian(action, point, settings.wall_eps), -vector)
            point = self._damped_step(action, simplex, point, step, residual)

        raise NoConvergenceError(
            f"{action.id}: Newton did not converge in {settings.max_iter} iterations "
            f"(|X|={residual:.3e})", settings.max_iter, residual, point)

    def _damped_step(self, action: HermannActionSpec, simplex: OrbitSimplex,
                     point: PointInB, step: np.ndarray, residual: float) -> PointInB:
        settings = self.settings
        phi_start = potential(action, point, settings.wall_eps)
        floor = phi_start - 1e-14 * max(1.0, abs(phi_start))
        scale = 1.0
        for _ in range(settings.max_halvings + 1):
            candidate = PointInB.from_array(point.as_array() + scale * step)
            if simplex.clearance(candidate) > settings.wall_eps:
                try:
                    if potential(action, candidate, settings.wall_eps) >= floor:
                        return candidate
                except (OutsideDomainError, WallContactError):
                    pass
            scale *= 0.5
        raise NoConvergenceError(
            f"{action.id}: step damping exhausted at {point}", 0, residual, point)

    def edges(self, action: HermannActionSpec,
              simplex: Optional[OrbitSimplex] = None) -> List[EquilibriumResult]:
        """
        Maximize the boundary potential along each edge.

        Args:
            action: Catalog row
            simplex: Prebuilt orbit simplex of the action

        Returns:
            Three results in edge order, each EDGE or VERTEX
        """
        simplex = simplex or build_simplex(action)
        return [self._edge(action, edge) for edge in simplex.edges]

    def _edge(self, action: HermannActionSpec, edge: Edge) -> EquilibriumResult:
        settings = self.settings
        length = edge.length
        tangent = edge.tangent
        margin = 1e-7 * length
        low, high = margin, length - margin

        def tangential(s: float) -> float:
            return float(field_at(action, edge.point_at(s), settings.wall_eps).vector @ tangent)

        g_low, g_high = tangential(low), tangential(high)
        # g increases along the edge; a single sign means the maximizer is a vertex
        if g_low >= 0.0 or g_high <= 0.0:
            vertex = edge.vertex_indices[0] if g_low >= 0.0 else edge.vertex_indices[1]
            location = edge.start if g_low >= 0.0 else edge.end
            self.logger.info(f"{action.id}: edge {edge.index} maximizer is vertex {vertex} {location}")
            return EquilibriumResult(location, 0.0, 0, True, EquilibriumKind.VERTEX,
                                     index=vertex, edge_index=edge.index)

        s, info = brentq(tangential, low, high, xtol=1e-15, rtol=4 * np.finfo(float).eps,
                         maxiter=settings.max_iter * 2, full_output=True, disp=False)
        iterations = info.iterations
        value = tangential(s)
        for _ in range(3):
            if abs(value) < settings.edge_tol:
                break
            slope = float(tangent @ jacobian(action, edge.point_at(s), settings.wall_eps,
                                             allow_boundary=True) @ tangent)
            candidate = s - value / slope
            if not low < candidate < high:
                break
            candidate_value = tangential(candidate)
            if abs(candidate_value) >= abs(value):
                break
            s, value = candidate, candidate_value
            iterations += 1

        location = edge.point_at(s)
        converged = info.converged and abs(value) < max(settings.edge_tol, 1e-10)
        if not converged:
            raise NoConvergenceError(
                f"{action.id}: edge {edge.index} solve stalled at {location} (|g|={abs(value):.3e})",
                iterations, abs(value), location)

        normal = abs(normal_component(action, edge, location, settings.wall_eps))
        self.logger.info(f"{action.id}: edge {edge.index} equilibrium {location}")
        return EquilibriumResult(location, abs(value), iterations, True, EquilibriumKind.EDGE,
                                 index=edge.index, edge_index=edge.index, normal_residual=normal)

    def compare_with_golden(self, action: HermannActionSpec) -> Table31Comparison:
        """
        Solve an action and compare with its printed equilibria.

        Raises:
            MissingGoldenError: If the action carries no printed values
        """
        golden = action.table31
        if golden is None:
            raise MissingGoldenError(f"{action.id} has no printed equilibrium values")

        simplex = build_simplex(action)
        comparison = Table31Comparison(action.id, None)
        if golden.interior is not None:
            interior = self.interior(action, simplex=simplex)
            comparison.interior = self._compare("interior", golden.interior, interior.location)

        if golden.edges:
            computed = [result.location for result in self.edges(action, simplex)]
            for index, point in enumerate(golden.edges):
                target = PointInB(point.x1, point.x2)
                nearest = min(computed, key=target.distance_to)
                comparison.edges.append(self._compare(f"edge {index}", point, nearest))

        for record in comparison.records:
            if record.status == CheckStatus.FAIL:
                self.logger.warning(f"{action.id} {record.label}: deviation {record.deviation:.3e} "
                                    f"exceeds {record.tolerance:g}")
            elif record.status == CheckStatus.FLAGGED:
                self.logger.info(f"{action.id} {record.label}: flagged ({record.note})")
        return comparison

    @staticmethod
    def _compare(label: str, golden: GoldenPoint, computed: PointInB) -> GoldenComparison:
        deviation = max(abs(golden.x1 - computed.x1), abs(golden.x2 - computed.x2))
        if deviation <= golden.tolerance:
            status = CheckStatus.PASS
        elif golden.note:
            status = CheckStatus.FLAGGED
        else:
            status = CheckStatus.FAIL
        return GoldenComparison(label, golden, computed, deviation, golden.tolerance, status)


def find_interior_equilibrium(action: HermannActionSpec,
                              settings: Optional[SolverSettings] = None,
                              seed: Optional[PointInB] = None) -> EquilibriumResult:
    return EquilibriumSolver(settings).interior(action, seed)


def find_edge_equilibria(action: HermannActionSpec,
                         settings: Optional[SolverSettings] = None) -> List[EquilibriumResult]:
    return EquilibriumSolver(settings).edges(action)


def reproduce_table31(action: HermannActionSpec,
                      settings: Optional[SolverSettings] = None) -> Table31Comparison:
    """Run both solvers and grade the printed equilibrium values of an action."""
    return EquilibriumSolver(settings).compare_with_golden(action)


def solve_all(action: HermannActionSpec,
              settings: Optional[SolverSettings] = None) -> Tuple[EquilibriumResult, List[EquilibriumResult]]:
    """Interior and edge equilibria from one simplex construction."""
    solver = EquilibriumSolver(settings)
    simplex = build_simplex(action)
    return solver.interior(action, simplex=simplex), solver.edges(action, simplex)
