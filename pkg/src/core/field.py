"""
Mean Curvature Field

Evaluates the mean-curvature vector field of the principal orbits on the
orbit simplex, its restriction to boundary edges through per-point active
root sets, the log-volume potential whose negative gradient is the field,
the field Jacobian and the shape-operator spectra of the orbits.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from core.catalog import (
    Edge,
    HermannActionSpec,
    PointInB,
    PositiveRoot,
    Wall,
    WallSide,
    root_vector,
)
from core.errors import OutsideDomainError, WallContactError


# Distance in radians of lambda below which a root counts as sitting on its wall.
WALL_EPS = 1e-9

HALF_PI = math.pi / 2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldValue:
    """Field vector at a point plus the V and H roots that contributed to it."""

    vector: np.ndarray
    active_v: Tuple[PositiveRoot, ...]
    active_h: Tuple[PositiveRoot, ...]
    # roots dropped because they sit on a wall
    inactive_count: int = 0

    @property
    def norm(self) -> float:
        return float(np.hypot(self.vector[0], self.vector[1]))

    @property
    def on_boundary(self) -> bool:
        return self.inactive_count > 0

    def __str__(self) -> str:
        return f"({self.vector[0]:.10g}, {self.vector[1]:.10g})"


@dataclass(frozen=True)
class ShapeEigenvalue:
    eigenvalue: float
    multiplicity: int
    root: PositiveRoot
    family: str


@dataclass(frozen=True)
class ShapeSpectrum:
    """
    Root blocks of the shape operator in one normal direction.

    The zero-eigenvalue block of the centralizer is not dimensioned by the
    catalog and is left out.
    """

    entries: Tuple[ShapeEigenvalue, ...]
    normal_direction: Tuple[float, float]

    @property
    def weighted_trace(self) -> float:
        return float(sum(entry.eigenvalue * entry.multiplicity for entry in self.entries))

    @property
    def weighted_square_sum(self) -> float:
        return float(sum(entry.eigenvalue ** 2 * entry.multiplicity for entry in self.entries))

    @property
    def max_abs_eigenvalue(self) -> float:
        return max((abs(entry.eigenvalue) for entry in self.entries), default=0.0)


@dataclass(frozen=True)
class _RootState:
    """Pairings and active masks of every root at one point."""

    pairings: np.ndarray
    active_v: np.ndarray
    active_h: np.ndarray
    has_v: np.ndarray
    has_h: np.ndarray

    @property
    def touching(self) -> np.ndarray:
        return (self.has_v & ~self.active_v) | (self.has_h & ~self.active_h)


def eval_root(action: HermannActionSpec, root, point: PointInB) -> float:
    """
    Pair a root with a point of the flat section.

    Args:
        action: Catalog row supplying the root system kind
        root: PositiveRoot or coefficient pair (p, q)
        point: Point Z

    Returns:
        lambda(Z) in radians
    """
    vector = root_vector(action.kind, root)
    return float(vector[0] * point.x1 + vector[1] * point.x2)


def _root_state(action: HermannActionSpec, point: PointInB, wall_eps: float) -> _RootState:
    table = action.root_table
    pairings = table.vectors @ point.as_array()
    has_v = table.mult_v > 0
    has_h = table.mult_h > 0

    for index, value in enumerate(pairings):
        root = table.roots[index]
        normal = (float(table.vectors[index][0]), float(table.vectors[index][1]))
        if has_v[index] and value < -wall_eps:
            raise OutsideDomainError(f"{root.label}(Z) = {value:.10g} < 0",
                                     Wall(root, WallSide.V_ZERO, normal))
        if has_v[index] and value > math.pi + wall_eps:
            raise OutsideDomainError(f"{root.label}(Z) = {value:.10g} > π",
                                     Wall(root, WallSide.V_PI, normal))
        if has_h[index] and value < -HALF_PI - wall_eps:
            raise OutsideDomainError(f"{root.label}(Z) = {value:.10g} < -π/2",
                                     Wall(root, WallSide.H_NEG, normal))
        if has_h[index] and value > HALF_PI + wall_eps:
            raise OutsideDomainError(f"{root.label}(Z) = {value:.10g} > π/2",
                                     Wall(root, WallSide.H_POS, normal))

    active_v = has_v & (pairings > wall_eps) & (pairings < math.pi - wall_eps)
    active_h = has_h & (np.abs(pairings) < HALF_PI - wall_eps)
    return _RootState(pairings, active_v, active_h, has_v, has_h)


def _touching_walls(action: HermannActionSpec, state: _RootState) -> List[Wall]:
    table = action.root_table
    walls = []
    for index in np.flatnonzero(state.touching):
        root = table.roots[index]
        normal = (float(table.vectors[index][0]), float(table.vectors[index][1]))
        value = state.pairings[index]
        if state.has_v[index] and not state.active_v[index]:
            walls.append(Wall(root, WallSide.V_ZERO if value < HALF_PI else WallSide.V_PI, normal))
        if state.has_h[index] and not state.active_h[index]:
            walls.append(Wall(root, WallSide.H_NEG if value < 0 else WallSide.H_POS, normal))
    return walls


def _interior_state(action: HermannActionSpec, point: PointInB, wall_eps: float) -> _RootState:
    state = _root_state(action, point, wall_eps)
    if state.touching.any():
        wall = _touching_walls(action, state)[0]
        raise WallContactError(f"Point {point} touches wall {wall.label}", wall)
    return state


def field_at(action: HermannActionSpec, point: PointInB, wall_eps: float = WALL_EPS) -> FieldValue:
    """
    Evaluate the mean-curvature field on the closed simplex.

    Roots within wall_eps of a singular level are dropped, so on an open edge
    this is the boundary field of that edge and in the interior it is the
    full field.

    Args:
        action: Catalog row
        point: Point Z of the closed simplex
        wall_eps: Active-set threshold in radians

    Returns:
        FieldValue with the vector and the contributing roots

    Raises:
        OutsideDomainError: If Z lies beyond a wall by more than wall_eps
    """
    state = _root_state(action, point, wall_eps)
    table = action.root_table

    v_values = state.pairings[state.active_v]
    h_values = state.pairings[state.active_h]
    v_weights = -table.mult_v[state.active_v] / np.tan(v_values)
    h_weights = table.mult_h[state.active_h] * np.tan(h_values)
    vector = v_weights @ table.vectors[state.active_v] + h_weights @ table.vectors[state.active_h]

    return FieldValue(
        vector=np.asarray(vector, dtype=float).reshape(2),
        active_v=tuple(root for root, flag in zip(table.roots, state.active_v) if flag),
        active_h=tuple(root for root, flag in zip(table.roots, state.active_h) if flag),
        inactive_count=int(state.touching.sum()),
    )


def potential(action: HermannActionSpec, point: PointInB, wall_eps: float = WALL_EPS) -> float:
    """
    Log-volume potential with the field as its negative gradient.

    Raises:
        OutsideDomainError: If Z lies outside the simplex
        WallContactError: If Z sits on a wall
    """
    state = _interior_state(action, point, wall_eps)
    table = action.root_table
    values = state.pairings
    total = np.sum(table.mult_v[state.has_v] * np.log(np.sin(values[state.has_v])))
    total += np.sum(table.mult_h[state.has_h] * np.log(np.cos(values[state.has_h])))
    return float(total)


def _outer_sum(vectors: np.ndarray, weights: np.ndarray) -> np.ndarray:
    return (vectors * weights[:, None]).T @ vectors


def jacobian(action: HermannActionSpec, point: PointInB, wall_eps: float = WALL_EPS,
             allow_boundary: bool = False) -> np.ndarray:
    """
    Jacobian of the field, equal to minus the Hessian of the potential.

    Args:
        action: Catalog row
        point: Point Z
        wall_eps: Active-set threshold in radians
        allow_boundary: Sum over the active roots only, for points on an edge

    Returns:
        Symmetric positive-definite 2x2 matrix

    Raises:
        OutsideDomainError: If Z lies outside the simplex
        WallContactError: If Z sits on a wall and allow_boundary is False
    """
    if allow_boundary:
        state = _root_state(action, point, wall_eps)
    else:
        state = _interior_state(action, point, wall_eps)
    table = action.root_table

    v_weights = table.mult_v[state.active_v] / np.sin(state.pairings[state.active_v]) ** 2
    h_weights = table.mult_h[state.active_h] / np.cos(state.pairings[state.active_h]) ** 2
    matrix = _outer_sum(table.vectors[state.active_v], v_weights)
    matrix = matrix + _outer_sum(table.vectors[state.active_h], h_weights)
    return 0.5 * (matrix + matrix.T)


def shape_spectrum(action: HermannActionSpec, point: PointInB, direction: Sequence[float],
                   wall_eps: float = WALL_EPS, allow_boundary: bool = False) -> ShapeSpectrum:
    """
    Shape-operator eigenvalues of the orbit through Z in a unit normal direction.

    V roots contribute -lambda(v)/tan(lambda(Z)) and H roots lambda(v)*tan(lambda(Z)),
    each with its multiplicity.

    Raises:
        ValueError: If direction is not a unit vector
        WallContactError: If Z sits on a wall and allow_boundary is False
    """
    normal = np.asarray(direction, dtype=float).reshape(2)
    if abs(np.linalg.norm(normal) - 1.0) > 1e-9:
        raise ValueError(f"Normal direction must be a unit vector, got {tuple(normal)}")

    if allow_boundary:
        state = _root_state(action, point, wall_eps)
    else:
        state = _interior_state(action, point, wall_eps)
    table = action.root_table

    entries: List[ShapeEigenvalue] = []
    for index, root in enumerate(table.roots):
        along = float(table.vectors[index] @ normal)
        value = state.pairings[index]
        if state.active_v[index]:
            entries.append(ShapeEigenvalue(-along / math.tan(value), int(table.mult_v[index]), root, "V"))
        if state.active_h[index]:
            entries.append(ShapeEigenvalue(along * math.tan(value), int(table.mult_h[index]), root, "H"))

    return ShapeSpectrum(tuple(entries), (float(normal[0]), float(normal[1])))


FRAME = ((1.0, 0.0), (0.0, 1.0))


def second_fundamental_norm_sq(action: HermannActionSpec, point: PointInB,
                               wall_eps: float = WALL_EPS, allow_boundary: bool = False) -> float:
    """
    Squared norm of the second fundamental form over the root blocks.

    Raises:
        WallContactError: If Z sits on a wall and allow_boundary is False
    """
    if allow_boundary:
        state = _root_state(action, point, wall_eps)
    else:
        state = _interior_state(action, point, wall_eps)
    table = action.root_table

    lengths_sq = np.sum(table.vectors ** 2, axis=1)
    v_terms = table.mult_v * lengths_sq / np.tan(np.where(state.active_v, state.pairings, 1.0)) ** 2
    h_terms = table.mult_h * lengths_sq * np.tan(np.where(state.active_h, state.pairings, 0.0)) ** 2
    return float(np.sum(v_terms[state.active_v]) + np.sum(h_terms[state.active_h]))


def normal_component(action: HermannActionSpec, edge: Edge, point: PointInB,
                     wall_eps: float = WALL_EPS) -> float:
    """Component of the boundary field along the inward normal of an edge."""
    value = field_at(action, point, wall_eps)
    return float(value.vector @ edge.wall.inward_normal)


def tangential_component(action: HermannActionSpec, edge: Edge, point: PointInB,
                         wall_eps: float = WALL_EPS) -> float:
    value = field_at(action, point, wall_eps)
    return float(value.vector @ edge.tangent)


def evaluate_batch(action: HermannActionSpec, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorized field and potential at many interior points.

    Args:
        action: Catalog row
        points: Array of shape (n, 2), every row strictly inside the simplex

    Returns:
        Tuple of (field vectors of shape (n, 2), potentials of shape (n,))
    """
    table = action.root_table
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    pairings = points @ table.vectors.T
    has_v = table.mult_v > 0
    has_h = table.mult_h > 0

    safe_v = np.where(has_v, pairings, HALF_PI)
    safe_h = np.where(has_h, pairings, 0.0)
    v_weights = -table.mult_v / np.tan(safe_v)
    h_weights = table.mult_h * np.tan(safe_h)
    vectors = (v_weights + h_weights) @ table.vectors

    phi = np.sum(table.mult_v * np.log(np.sin(safe_v)), axis=1)
    phi += np.sum(table.mult_h * np.log(np.cos(safe_h)), axis=1)
    return vectors, phi


def reflection_symmetric(action: HermannActionSpec) -> bool:
    """True when the root data are invariant under x2 -> -x2."""
    table = action.root_table

    def signature(flip: bool) -> List[Tuple[float, float, float, float]]:
        items = []
        for vector, m_v, m_h in zip(table.vectors, table.mult_v, table.mult_h):
            x, y = (vector[0], -vector[1]) if flip else (vector[0], vector[1])
            # a root and its negative define the same terms up to the family sign
            if x < 0 or (x == 0 and y < 0):
                x, y = -x, -y
            items.append((round(x, 9), round(y, 9), float(m_v), float(m_h)))
        return sorted(items)

    return signature(False) == signature(True)


def touching_walls(action: HermannActionSpec, point: PointInB,
                   wall_eps: float = WALL_EPS) -> Tuple[Wall, ...]:
    """Walls the point currently sits on, empty for interior points."""
    return tuple(_touching_walls(action, _root_state(action, point, wall_eps)))
