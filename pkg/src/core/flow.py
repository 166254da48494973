"""
Orbit Flow

Integrates the mean curvature flow of orbits as the integral curves of the
mean-curvature field on the orbit simplex, detects the finite-time collapse
onto a boundary stratum and reports type-I diagnostics for the collapse.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from core.catalog import Edge, HermannActionSpec, OrbitSimplex, PointInB, build_simplex
from core.errors import NotCollapsedError, OutsideDomainError, StepCollapseError, WallContactError
from core.field import (
    FRAME,
    WALL_EPS,
    field_at,
    normal_component,
    potential,
    second_fundamental_norm_sq,
    shape_spectrum,
)


@dataclass(frozen=True)
class FlowParameters:
    """Stop conditions and error control of a flow run."""

    t_max: float = 50.0
    delta_stop: float = 1e-6
    rtol: float = 1e-10
    atol: float = 1e-10
    step_cap_factor: float = 0.25
    equilibrium_tol: float = 1e-10
    initial_step: float = 1e-4
    max_steps: int = 200000
    wall_eps: float = WALL_EPS

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "FlowParameters":
        flow = config.get("flow", {})
        return cls(
            t_max=float(flow.get("t_max", cls.t_max)),
            delta_stop=float(flow.get("delta_stop", cls.delta_stop)),
            rtol=float(flow.get("rtol", cls.rtol)),
            atol=float(flow.get("atol", cls.atol)),
            step_cap_factor=float(flow.get("step_cap_factor", cls.step_cap_factor)),
            equilibrium_tol=float(flow.get("equilibrium_tol", cls.equilibrium_tol)),
            initial_step=float(flow.get("initial_step", cls.initial_step)),
            max_steps=int(flow.get("max_steps", cls.max_steps)),
            wall_eps=float(config.get("field", {}).get("wall_eps", cls.wall_eps)),
        )


class TerminationKind(Enum):
    EQUILIBRIUM = "EQUILIBRIUM"
    WALL_CONTACT = "WALL_CONTACT"
    MAX_TIME = "MAX_TIME"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Stratum:
    """Boundary stratum of the simplex: an open edge or a vertex."""

    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind} {self.index}"


@dataclass(frozen=True)
class Termination:
    kind: TerminationKind
    stratum: Optional[Stratum] = None

    def __str__(self) -> str:
        return f"{self.kind}({self.stratum})" if self.stratum else str(self.kind)


@dataclass(frozen=True)
class FlowSample:
    """
    State of the flow at one accepted time.

    ``phi`` is NaN on edge runs, where the interior potential is undefined.
    ``normal_component`` is the dropped normal part of the boundary field.
    """

    t: float
    point: PointInB
    speed: float
    h_norm_sq: float
    wall_distance: float
    phi: float = math.nan
    normal_component: float = 0.0


@dataclass
class Trajectory:
    action_id: str
    samples: List[FlowSample] = field(default_factory=list)
    termination: Optional[Termination] = None
    collapse_time_estimate: Optional[float] = None
    edge_index: Optional[int] = None
    direction: int = 1

    @property
    def final(self) -> FlowSample:
        return self.samples[-1]

    @property
    def times(self) -> np.ndarray:
        return np.array([sample.t for sample in self.samples])

    @property
    def points(self) -> np.ndarray:
        return np.array([sample.point.as_array() for sample in self.samples]).reshape(-1, 2)

    def __len__(self) -> int:
        return len(self.samples)


class EmbeddedRungeKutta:
    """
    Runge-Kutta-Fehlberg 4(5) pair.

    The 4th order solution is propagated and the difference to the 5th order
    solution is the local error estimate.
    """

    stages = (0.0, 1 / 4, 3 / 8, 12 / 13, 1.0, 1 / 2)

    tableau = (
        (1 / 4,),
        (3 / 32, 9 / 32),
        (1932 / 2197, -7200 / 2197, 7296 / 2197),
        (439 / 216, -8.0, 3680 / 513, -845 / 4104),
        (-8 / 27, 2.0, -3554 / 2565, 1859 / 4104, -11 / 40),
    )

    weights = np.array([25 / 216, 0.0, 1408 / 2565, 2197 / 4104, -1 / 5, 0.0])

    # difference of the 5th and 4th order weights
    error_weights = np.array([1 / 360, 0.0, -128 / 4275, -2197 / 75240, 1 / 50, 2 / 55])

    order = 4

    def __init__(self, rtol: float, atol: float):
        self.rtol = rtol
        self.atol = atol

    def step(self, rhs: Callable[[np.ndarray], np.ndarray], y: np.ndarray,
             h: float) -> Tuple[np.ndarray, float]:
        """
        Advance one step of an autonomous system.

        Returns:
            Tuple of (4th order solution, scaled error norm); a norm of at most 1 accepts the step
        """
        slopes = [rhs(y)]
        for row in self.tableau:
            stage = y + h * sum(coeff * slope for coeff, slope in zip(row, slopes))
            slopes.append(rhs(stage))
        slopes = np.array(slopes)

        y_new = y + h * (self.weights @ slopes)
        error = h * (self.error_weights @ slopes)
        scale = self.atol + self.rtol * np.maximum(np.abs(y), np.abs(y_new))
        return y_new, float(np.max(np.abs(error) / scale))

    def next_step(self, h: float, error_norm: float) -> float:
        if error_norm == 0.0:
            return 5.0 * h
        factor = 0.9 * error_norm ** (-1.0 / (self.order + 1))
        return h * min(5.0, max(0.2, factor))


class FlowIntegrator:
    """Adaptive integration of the orbit flow from one starting point."""

    def __init__(self, params: Optional[FlowParameters] = None):
        self.params = params or FlowParameters()
        self.logger = logging.getLogger(__name__)

    def integrate(self, action: HermannActionSpec, start: PointInB,
                  direction: int = 1) -> Trajectory:
        """
        Integrate Z' = direction * X from a point of the closed simplex.

        Starts on an open edge follow the tangential part of the boundary
        field along that edge. Vertex starts are stationary.

        Args:
            action: Catalog row
            start: Starting point Z0
            direction: +1 for the flow, -1 for the time-reversed flow

        Returns:
            Trajectory ending in EQUILIBRIUM, WALL_CONTACT or MAX_TIME

        Raises:
            OutsideDomainError: If Z0 lies outside the simplex
            StepCollapseError: If the step size underflows first
        """
        if direction not in (1, -1):
            raise ValueError(f"direction must be +1 or -1, got {direction}")

        params = self.params
        simplex = build_simplex(action)
        if not simplex.contains(start, tol=params.wall_eps):
            raise OutsideDomainError(f"Start {start} lies outside the orbit simplex of {action.id}")

        trajectory = Trajectory(action.id, direction=direction)
        vertex = self._vertex_at(simplex, start, params.wall_eps)
        if vertex is not None:
            trajectory.samples.append(FlowSample(0.0, start, 0.0, math.nan, 0.0))
            trajectory.termination = Termination(TerminationKind.EQUILIBRIUM, Stratum("vertex", vertex))
            return trajectory

        edge = simplex.edge_containing(start, tol=params.wall_eps)
        if edge is not None:
            trajectory.edge_index = edge.index
            self.logger.debug(f"{action.id}: start {start} lies on {edge}")

        rhs = self._right_hand_side(action, simplex, edge, direction)
        stepper = EmbeddedRungeKutta(params.rtol, params.atol)

        y = start.as_array()
        t = 0.0
        h = params.initial_step
        trajectory.samples.append(self._sample(action, simplex, edge, t, y, rhs))

        for _ in range(params.max_steps):
            sample = trajectory.samples[-1]
            done = self._check_stop(simplex, edge, sample)
            if done is not None:
                trajectory.termination = done
                break

            cap = params.step_cap_factor * sample.wall_distance / max(sample.speed, 1e-300)
            h = min(h, cap, params.t_max - t)
            if h <= 4.0 * np.spacing(max(1.0, abs(t))):
                raise StepCollapseError(
                    f"{action.id}: step size underflow at t={t:.10g}, Z={sample.point}", trajectory)

            try:
                y_new, error_norm = stepper.step(rhs, y, h)
            except (OutsideDomainError, WallContactError):
                h *= 0.25
                continue

            if error_norm > 1.0 or not np.all(np.isfinite(y_new)):
                h = stepper.next_step(h, error_norm) if np.isfinite(error_norm) else 0.25 * h
                continue

            t_new = params.t_max if h >= params.t_max - t else t + h
            try:
                accepted = self._sample(action, simplex, edge, t_new, y_new, rhs)
            except (OutsideDomainError, WallContactError):
                h *= 0.25
                continue

            t, y = t_new, y_new
            trajectory.samples.append(accepted)
            h = stepper.next_step(h, error_norm)
        else:
            raise StepCollapseError(
                f"{action.id}: step budget of {params.max_steps} exhausted at t={t:.10g}", trajectory)

        if trajectory.termination.kind == TerminationKind.WALL_CONTACT:
            trajectory.collapse_time_estimate = estimate_collapse_time(trajectory)
        self.logger.info(f"{action.id}: flow from {start} ended {trajectory.termination} "
                         f"at t={t:.10g} after {len(trajectory) - 1} steps")
        return trajectory

    @staticmethod
    def _vertex_at(simplex: OrbitSimplex, point: PointInB, tol: float) -> Optional[int]:
        touching = [edge for edge in simplex.edges
                    if any(abs(wall.slack(point)) <= tol for wall in edge.coincident_walls)]
        return simplex.nearest_vertex(point) if len(touching) >= 2 else None

    def _right_hand_side(self, action: HermannActionSpec, simplex: OrbitSimplex,
                         edge: Optional[Edge], direction: int) -> Callable[[np.ndarray], np.ndarray]:
        wall_eps = self.params.wall_eps

        if edge is None:
            def rhs(y: np.ndarray) -> np.ndarray:
                point = PointInB.from_array(y)
                if simplex.clearance(point) <= wall_eps:
                    raise OutsideDomainError(f"Stage point {point} left the open simplex")
                return direction * field_at(action, point, wall_eps).vector
        else:
            tangent = edge.tangent

            def rhs(y: np.ndarray) -> np.ndarray:
                point = PointInB.from_array(y)
                if simplex.wall_distance(point, exclude=edge.coincident_walls) <= 0.0:
                    raise OutsideDomainError(f"Stage point {point} left edge {edge.index}")
                along = float(field_at(action, point, wall_eps).vector @ tangent)
                return direction * along * tangent
        return rhs

    def _sample(self, action: HermannActionSpec, simplex: OrbitSimplex, edge: Optional[Edge],
                t: float, y: np.ndarray, rhs: Callable[[np.ndarray], np.ndarray]) -> FlowSample:
        point = PointInB.from_array(y)
        velocity = rhs(y)
        wall_eps = self.params.wall_eps
        if edge is None:
            return FlowSample(
                t=t,
                point=point,
                speed=float(np.hypot(*velocity)),
                h_norm_sq=second_fundamental_norm_sq(action, point, wall_eps),
                wall_distance=simplex.wall_distance(point),
                phi=potential(action, point, wall_eps),
            )
        return FlowSample(
            t=t,
            point=point,
            speed=float(np.hypot(*velocity)),
            h_norm_sq=second_fundamental_norm_sq(action, point, wall_eps, allow_boundary=True),
            wall_distance=simplex.wall_distance(point, exclude=edge.coincident_walls),
            normal_component=normal_component(action, edge, point, wall_eps),
        )

    def _check_stop(self, simplex: OrbitSimplex, edge: Optional[Edge],
                    sample: FlowSample) -> Optional[Termination]:
        params = self.params
        if sample.speed < params.equilibrium_tol:
            stratum = Stratum("edge", edge.index) if edge is not None else None
            return Termination(TerminationKind.EQUILIBRIUM, stratum)
        if sample.wall_distance < params.delta_stop:
            return Termination(TerminationKind.WALL_CONTACT,
                               limit_stratum(simplex, sample.point, params.delta_stop))
        if sample.t >= params.t_max:
            return Termination(TerminationKind.MAX_TIME)
        return None


def limit_stratum(simplex: OrbitSimplex, point: PointInB, delta_stop: float) -> Stratum:
    """Vertex when two edges are within 10 * delta_stop, else the nearest edge."""
    distances = sorted(
        (max(0.0, min(wall.distance(point) for wall in edge.coincident_walls)), edge.index)
        for edge in simplex.edges
    )
    (first, first_edge), (second, second_edge) = distances[0], distances[1]
    if second < 10.0 * delta_stop:
        shared = set(simplex.edges[first_edge].vertex_indices) & set(simplex.edges[second_edge].vertex_indices)
        return Stratum("vertex", shared.pop())
    return Stratum("edge", first_edge)


def estimate_collapse_time(trajectory: Trajectory, window: int = 10) -> float:
    """
    Extrapolate the wall distance to zero.

    Fit model: d(t)^2 = a + b * t by least squares over the last ``window``
    samples, giving T = -a / b. This follows from d ~ C * sqrt(T - t) near a
    wall. A nonnegative slope or an estimate before the final sample
    returns the final sample time.
    """
    samples = trajectory.samples[-window:]
    t_last = samples[-1].t
    if len(samples) < 2:
        return t_last
    times = np.array([sample.t for sample in samples])
    squares = np.array([sample.wall_distance ** 2 for sample in samples])
    slope, intercept = np.polyfit(times, squares, 1)
    if slope >= 0.0:
        return t_last
    return max(t_last, float(-intercept / slope))


@dataclass(frozen=True)
class CollapseDiagnostics:
    """Collapse time, limit stratum and the type-I statistic of one run."""

    collapse_time: float
    stratum: Stratum
    statistic: float
    bounded: bool
    statistic_series: Tuple[Tuple[float, float], ...] = ()

    def __str__(self) -> str:
        verdict = "bounded" if self.bounded else "growing"
        return (f"T={self.collapse_time:.10g} stratum={self.stratum} "
                f"sup (T-t)|A|^2={self.statistic:.10g} ({verdict})")


def collapse_diagnostics(action: HermannActionSpec, trajectory: Trajectory,
                         wall_eps: float = WALL_EPS) -> CollapseDiagnostics:
    """
    Type-I diagnostics of a collapsing run.

    The statistic is sup over samples of (T - t) times the largest squared
    shape-operator eigenvalue over both frame normals. It counts as bounded
    unless it grows monotonically by more than 10% across the last decade
    of T - t.

    Raises:
        NotCollapsedError: If the run did not end in WALL_CONTACT
    """
    termination = trajectory.termination
    if termination is None or termination.kind != TerminationKind.WALL_CONTACT:
        raise NotCollapsedError(f"{trajectory.action_id}: run ended {termination}, not WALL_CONTACT")

    collapse_time = trajectory.collapse_time_estimate
    if collapse_time is None:
        collapse_time = estimate_collapse_time(trajectory)

    on_edge = trajectory.edge_index is not None
    series = []
    for sample in trajectory.samples:
        remaining = collapse_time - sample.t
        if remaining <= 0.0:
            continue
        largest = max(
            shape_spectrum(action, sample.point, normal, wall_eps, allow_boundary=on_edge).max_abs_eigenvalue
            for normal in FRAME
        )
        series.append((remaining, remaining * largest ** 2))

    statistic = max((value for _, value in series), default=0.0)
    return CollapseDiagnostics(
        collapse_time=collapse_time,
        stratum=termination.stratum,
        statistic=statistic,
        bounded=_bounded(series),
        statistic_series=tuple(series),
    )


def _bounded(series: List[Tuple[float, float]]) -> bool:
    if not series:
        return True
    smallest = min(remaining for remaining, _ in series)
    decade = [value for remaining, value in series if remaining <= 10.0 * smallest]
    if len(decade) < 3:
        return True
    growing = all(later >= earlier for earlier, later in zip(decade, decade[1:]))
    return not (growing and decade[-1] > 1.1 * decade[0])


def integrate_flow(action: HermannActionSpec, start: PointInB,
                   params: Optional[FlowParameters] = None, direction: int = 1) -> Trajectory:
    return FlowIntegrator(params).integrate(action, start, direction)
