"""
Action Catalog

This module holds the rank-two restricted root systems, the classified
commuting Hermann actions with their split root multiplicities, and the
construction of each action's orbit simplex from its wall inequalities.
The embedded rows themselves live in ``core.catalog_data``.
"""

import json
import logging
import math
import re
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import CatalogIntegrityError, UnknownActionError


SQRT3 = math.sqrt(3.0)

# Slack below which a point counts as lying on a wall while the simplex is built.
VERTEX_TOL = 1e-9

logger = logging.getLogger(__name__)


class RootSystemKind(Enum):
    """Reduced or non-reduced root system of rank two."""

    A2 = "A2"
    B2 = "B2"
    BC2 = "BC2"
    G2 = "G2"

    @property
    def basis(self) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        """Simple roots (v_alpha, v_beta) in the orthonormal frame of the flat section."""
        return _BASES[self]

    @property
    def positive_system(self) -> Tuple[Tuple[int, int], ...]:
        """Coefficient pairs (p, q) of the positive roots p*alpha + q*beta."""
        return _POSITIVE_SYSTEMS[self]

    def __str__(self) -> str:
        return self.value


_BASES = {
    RootSystemKind.A2: ((2.0, 0.0), (-1.0, SQRT3)),
    RootSystemKind.B2: ((1.0, 0.0), (-1.0, 1.0)),
    RootSystemKind.BC2: ((1.0, 0.0), (-1.0, 1.0)),
    RootSystemKind.G2: ((2.0, 0.0), (-3.0, SQRT3)),
}

_POSITIVE_SYSTEMS = {
    RootSystemKind.A2: ((1, 0), (0, 1), (1, 1)),
    RootSystemKind.B2: ((1, 0), (0, 1), (1, 1), (2, 1)),
    RootSystemKind.BC2: ((1, 0), (0, 1), (1, 1), (2, 1), (2, 0), (2, 2)),
    RootSystemKind.G2: ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)),
}


def root_label(coeff_alpha: int, coeff_beta: int) -> str:
    """Render p*alpha + q*beta the way root tables print it, e.g. ``2α+β``."""
    parts = []
    for coeff, symbol in ((coeff_alpha, "α"), (coeff_beta, "β")):
        if coeff == 1:
            parts.append(symbol)
        elif coeff > 1:
            parts.append(f"{coeff}{symbol}")
    return "+".join(parts)


_TERM_SPLIT = re.compile(r"[+-]?[^+-]+")
_TERM = re.compile(r"([+-]?)(\d*)([qj]?)")


@dataclass(frozen=True)
class Multiplicity:
    """Affine multiplicity ``constant + q_coeff*q + j_coeff*j``."""

    constant: int = 0
    q_coeff: int = 0
    j_coeff: int = 0

    @classmethod
    def parse(cls, value: Union[int, str, "Multiplicity"]) -> "Multiplicity":
        """
        Parse an integer or an expression such as ``"2q-4"`` or ``"q-j-1"``.

        Raises:
            CatalogIntegrityError: If the text is not an affine expression in q and j
        """
        if isinstance(value, Multiplicity):
            return value
        if isinstance(value, bool):
            raise CatalogIntegrityError(f"Invalid multiplicity: {value!r}")
        if isinstance(value, int):
            return cls(constant=value)

        text = str(value).replace(" ", "").replace("−", "-")
        terms = _TERM_SPLIT.findall(text)
        if not text or "".join(terms) != text:
            raise CatalogIntegrityError(f"Cannot parse multiplicity '{value}'")

        coeffs = {"": 0, "q": 0, "j": 0}
        for term in terms:
            match = _TERM.fullmatch(term)
            if match is None or not (match.group(2) or match.group(3)):
                raise CatalogIntegrityError(f"Cannot parse multiplicity '{value}'")
            sign, digits, symbol = match.groups()
            amount = int(digits) if digits else 1
            coeffs[symbol] += -amount if sign == "-" else amount

        return cls(constant=coeffs[""], q_coeff=coeffs["q"], j_coeff=coeffs["j"])

    @property
    def is_constant(self) -> bool:
        return self.q_coeff == 0 and self.j_coeff == 0

    def evaluate(self, params: Optional[Dict[str, int]] = None) -> int:
        """Evaluate the expression at the given parameter values."""
        params = params or {}
        total = self.constant
        for coeff, name in ((self.q_coeff, "q"), (self.j_coeff, "j")):
            if coeff == 0:
                continue
            if name not in params:
                raise CatalogIntegrityError(f"Multiplicity '{self}' needs parameter {name}")
            total += coeff * int(params[name])
        return total

    def to_json(self) -> Union[int, str]:
        return self.constant if self.is_constant else str(self)

    def __str__(self) -> str:
        pieces: List[str] = []
        for coeff, symbol in ((self.q_coeff, "q"), (self.j_coeff, "j"), (self.constant, "")):
            if coeff == 0:
                continue
            magnitude = abs(coeff)
            body = symbol if symbol and magnitude == 1 else f"{magnitude}{symbol}"
            sign = "-" if coeff < 0 else ("+" if pieces else "")
            pieces.append(f"{sign}{body}")
        return "".join(pieces) or "0"


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root p*alpha + q*beta with its total, V and H multiplicities."""

    coeff_alpha: int
    coeff_beta: int
    mult_total: Multiplicity
    mult_v: Multiplicity
    mult_h: Multiplicity

    @property
    def coefficients(self) -> Tuple[int, int]:
        return (self.coeff_alpha, self.coeff_beta)

    @property
    def label(self) -> str:
        return root_label(self.coeff_alpha, self.coeff_beta)

    def __str__(self) -> str:
        return (f"{self.label} (total {self.mult_total}, "
                f"V {self.mult_v}, H {self.mult_h})")


@dataclass(frozen=True)
class ParamSpec:
    """Integer parameter of a parametric catalog row."""

    name: str
    value: int
    minimum: int


@dataclass(frozen=True)
class GoldenPoint:
    """A printed equilibrium coordinate pair."""

    x1: float
    x2: float
    exact: bool = False
    note: Optional[str] = None

    @property
    def tolerance(self) -> float:
        return 1e-9 if self.exact else 1e-4


@dataclass(frozen=True)
class Table31Golden:
    """Printed minimal-orbit coordinates: one interior point, up to three edge points."""

    interior: Optional[GoldenPoint]
    edges: Tuple[GoldenPoint, ...] = ()


@dataclass(frozen=True, order=True)
class PointInB:
    """Point Z = x1*e1 + x2*e2 of the flat section, in radians."""

    x1: float
    x2: float

    def __post_init__(self):
        x1 = float(self.x1)
        x2 = float(self.x2)
        if not (math.isfinite(x1) and math.isfinite(x2)):
            raise ValueError(f"Point coordinates must be finite, got ({self.x1}, {self.x2})")
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "PointInB":
        return cls(float(values[0]), float(values[1]))

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2])

    def distance_to(self, other: "PointInB") -> float:
        return math.hypot(self.x1 - other.x1, self.x2 - other.x2)

    def __iter__(self) -> Iterator[float]:
        yield self.x1
        yield self.x2

    def __str__(self) -> str:
        return f"({self.x1:.10g}, {self.x2:.10g})"


@dataclass(frozen=True)
class RootTable:
    """Numeric view of an action's roots at its parameter values."""

    roots: Tuple[PositiveRoot, ...]
    vectors: np.ndarray
    mult_v: np.ndarray
    mult_h: np.ndarray
    mult_total: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.roots)


@dataclass(frozen=True)
class HermannActionSpec:
    """One row of the classification of commuting Hermann actions."""

    id: str
    display_name: str
    kind: RootSystemKind
    roots: Tuple[PositiveRoot, ...]
    dual_name: str = ""
    l_star_name: str = ""
    params: Tuple[ParamSpec, ...] = ()
    table31: Optional[Table31Golden] = None
    known_inconsistencies: Tuple[str, ...] = ()

    @property
    def param_values(self) -> Dict[str, int]:
        return {param.name: param.value for param in self.params}

    @cached_property
    def root_table(self) -> RootTable:
        """
        Evaluate multiplicities and root vectors once per spec.

        Roots whose V and H multiplicities both vanish are left out.

        Raises:
            CatalogIntegrityError: If a multiplicity evaluates negative
        """
        values = self.param_values
        kept, vectors, mult_v, mult_h, totals = [], [], [], [], []
        for root in self.roots:
            m_v = root.mult_v.evaluate(values)
            m_h = root.mult_h.evaluate(values)
            m_total = root.mult_total.evaluate(values)
            if min(m_v, m_h, m_total) < 0:
                raise CatalogIntegrityError(
                    f"{self.id}: negative multiplicity for root {root.label} "
                    f"(total {m_total}, V {m_v}, H {m_h})")
            if m_v == 0 and m_h == 0:
                continue
            kept.append(root)
            vectors.append(root_vector(self.kind, root))
            mult_v.append(float(m_v))
            mult_h.append(float(m_h))
            totals.append(m_total)

        return RootTable(
            roots=tuple(kept),
            vectors=np.array(vectors, dtype=float).reshape(-1, 2),
            mult_v=np.array(mult_v),
            mult_h=np.array(mult_h),
            mult_total=tuple(totals),
        )

    def __str__(self) -> str:
        return f"{self.display_name} ({self.id})"


class WallSide(Enum):
    """Singular level of a wall: V roots at 0 and pi, H roots at -pi/2 and pi/2."""

    V_ZERO = "V_ZERO"
    V_PI = "V_PI"
    H_NEG = "H_NEG"
    H_POS = "H_POS"

    @property
    def level(self) -> float:
        return _LEVELS[self][0]

    @property
    def level_text(self) -> str:
        return _LEVELS[self][1]

    @property
    def family(self) -> str:
        return "V" if self in (WallSide.V_ZERO, WallSide.V_PI) else "H"

    @property
    def is_lower(self) -> bool:
        """True when the admissible side is lambda >= level."""
        return self in (WallSide.V_ZERO, WallSide.H_NEG)


_LEVELS = {
    WallSide.V_ZERO: (0.0, "0"),
    WallSide.V_PI: (math.pi, "π"),
    WallSide.H_NEG: (-math.pi / 2, "-π/2"),
    WallSide.H_POS: (math.pi / 2, "π/2"),
}


@dataclass(frozen=True)
class Wall:
    """The line lambda(Z) = level for one root and one singular level."""

    root: PositiveRoot
    side: WallSide
    normal: Tuple[float, float]

    def value(self, point: Union[PointInB, np.ndarray]) -> float:
        x1, x2 = point
        return self.normal[0] * x1 + self.normal[1] * x2

    def slack(self, point: Union[PointInB, np.ndarray]) -> float:
        """Signed margin of lambda(Z) inside its admissible range, in radians."""
        offset = self.value(point) - self.side.level
        return offset if self.side.is_lower else -offset

    def distance(self, point: Union[PointInB, np.ndarray]) -> float:
        """Signed Euclidean distance to the wall line, positive inside."""
        return self.slack(point) / math.hypot(*self.normal)

    @property
    def inward_normal(self) -> np.ndarray:
        unit = np.array(self.normal) / math.hypot(*self.normal)
        return unit if self.side.is_lower else -unit

    @property
    def label(self) -> str:
        return f"{self.root.label}={self.side.level_text}"

    def __str__(self) -> str:
        return f"{self.label} ({self.side.family})"


@dataclass(frozen=True)
class CandidateWall:
    wall: Wall
    active: bool


@dataclass(frozen=True)
class Edge:
    """Closed side of the orbit simplex, parametrized by arclength from ``start``."""

    index: int
    start: PointInB
    end: PointInB
    vertex_indices: Tuple[int, int]
    wall: Wall
    coincident_walls: Tuple[Wall, ...]

    @property
    def length(self) -> float:
        return self.start.distance_to(self.end)

    @property
    def tangent(self) -> np.ndarray:
        direction = self.end.as_array() - self.start.as_array()
        return direction / np.linalg.norm(direction)

    def point_at(self, s: float) -> PointInB:
        return PointInB.from_array(self.start.as_array() + s * self.tangent)

    def arclength_of(self, point: PointInB) -> float:
        return float(np.dot(point.as_array() - self.start.as_array(), self.tangent))

    def __str__(self) -> str:
        return f"edge {self.index} ({self.wall.label})"


@dataclass(frozen=True)
class OrbitSimplex:
    """The closed triangle parametrizing the orbits of one action."""

    action_id: str
    vertices: Tuple[PointInB, PointInB, PointInB]
    edges: Tuple[Edge, Edge, Edge]
    walls: Tuple[CandidateWall, ...]

    @property
    def active_walls(self) -> Tuple[Wall, ...]:
        return tuple(candidate.wall for candidate in self.walls if candidate.active)

    def clearance(self, point: Union[PointInB, np.ndarray]) -> float:
        """Smallest slack over every candidate wall, in radians of lambda."""
        return min(candidate.wall.slack(point) for candidate in self.walls)

    def clearances(self, points: np.ndarray) -> np.ndarray:
        """Vectorized clearance of an (n, 2) array of points."""
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        slacks = []
        for candidate in self.walls:
            wall = candidate.wall
            offset = points @ np.array(wall.normal) - wall.side.level
            slacks.append(offset if wall.side.is_lower else -offset)
        return np.min(slacks, axis=0)

    def contains(self, point: Union[PointInB, np.ndarray], tol: float = VERTEX_TOL) -> bool:
        return self.clearance(point) >= -tol

    def wall_distance(self, point: Union[PointInB, np.ndarray],
                      exclude: Sequence[Wall] = ()) -> float:
        """Euclidean distance to the nearest edge line, skipping the given walls."""
        distances = [wall.distance(point) for wall in self.active_walls if wall not in exclude]
        return min(distances) if distances else math.inf

    def incenter(self) -> PointInB:
        a, b, c = (vertex.as_array() for vertex in self.vertices)
        side_a = np.linalg.norm(b - c)
        side_b = np.linalg.norm(c - a)
        side_c = np.linalg.norm(a - b)
        center = (side_a * a + side_b * b + side_c * c) / (side_a + side_b + side_c)
        return PointInB.from_array(center)

    def inradius(self) -> float:
        a, b, c = (vertex.as_array() for vertex in self.vertices)
        area = 0.5 * abs(_cross(b - a, c - a))
        perimeter = np.linalg.norm(b - c) + np.linalg.norm(c - a) + np.linalg.norm(a - b)
        return float(2.0 * area / perimeter)

    def bounding_box(self) -> Tuple[float, float, float, float]:
        xs = [vertex.x1 for vertex in self.vertices]
        ys = [vertex.x2 for vertex in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)

    def edge_containing(self, point: PointInB, tol: float = VERTEX_TOL) -> Optional[Edge]:
        """The edge whose wall the point lies on, or None for interior points and vertices."""
        on_edges = [edge for edge in self.edges
                    if any(abs(wall.slack(point)) <= tol for wall in edge.coincident_walls)]
        return on_edges[0] if len(on_edges) == 1 else None

    def nearest_vertex(self, point: PointInB) -> int:
        return min(range(3), key=lambda index: self.vertices[index].distance_to(point))


def root_vector(kind: RootSystemKind, root: Union[PositiveRoot, Tuple[int, int]]) -> np.ndarray:
    """
    Return p*v_alpha + q*v_beta for a root of the given kind.

    Raises:
        CatalogIntegrityError: If (p, q) is not a positive root of the kind
    """
    coefficients = root.coefficients if isinstance(root, PositiveRoot) else tuple(root)
    if coefficients not in kind.positive_system:
        raise CatalogIntegrityError(
            f"{root_label(*coefficients) or coefficients} is not a positive root of {kind}")
    v_alpha, v_beta = (np.array(vector) for vector in kind.basis)
    return coefficients[0] * v_alpha + coefficients[1] * v_beta


def candidate_walls(action: HermannActionSpec) -> List[Wall]:
    """All wall lines of an action, in root order with V levels before H levels."""
    table = action.root_table
    walls: List[Wall] = []
    for root, vector, m_v, m_h in zip(table.roots, table.vectors, table.mult_v, table.mult_h):
        normal = (float(vector[0]), float(vector[1]))
        if m_v > 0:
            walls.append(Wall(root, WallSide.V_ZERO, normal))
            walls.append(Wall(root, WallSide.V_PI, normal))
        if m_h > 0:
            walls.append(Wall(root, WallSide.H_NEG, normal))
            walls.append(Wall(root, WallSide.H_POS, normal))
    return walls


def intersect_half_planes(walls: Sequence[Wall]) -> List[np.ndarray]:
    """Corners of the polygon cut out by the wall half-planes, deduplicated."""
    corners: List[np.ndarray] = []
    for first, second in combinations(walls, 2):
        matrix = np.array([first.normal, second.normal])
        if abs(np.linalg.det(matrix)) < 1e-12:
            continue
        point = np.linalg.solve(matrix, np.array([first.side.level, second.side.level]))
        if any(wall.slack(point) < -VERTEX_TOL for wall in walls):
            continue
        if any(np.max(np.abs(point - corner)) <= VERTEX_TOL for corner in corners):
            continue
        corners.append(point)
    return corners


def _cross(u: np.ndarray, v: np.ndarray) -> float:
    return float(u[0] * v[1] - u[1] * v[0])


def _snap(value: float) -> float:
    return 0.0 if abs(value) < 1e-12 else float(value)


def build_simplex(action: HermannActionSpec) -> OrbitSimplex:
    """
    Intersect every wall half-plane of an action into its orbit simplex.

    Args:
        action: Catalog row

    Returns:
        Triangle with lexicographically sorted vertices and edges (v0, v1),
        (v0, v2), (v1, v2)

    Raises:
        CatalogIntegrityError: If the polygon is not a nondegenerate triangle
    """
    walls = candidate_walls(action)
    corners = intersect_half_planes(walls)
    if len(corners) != 3:
        raise CatalogIntegrityError(
            f"Orbit space of {action.id} is not a triangle ({len(corners)} corners)")

    vertices = sorted(PointInB(_snap(corner[0]), _snap(corner[1])) for corner in corners)
    a, b, c = (vertex.as_array() for vertex in vertices)
    if abs(_cross(b - a, c - a)) < 1e-9:
        raise CatalogIntegrityError(f"Orbit space of {action.id} is degenerate")

    edges = []
    active: List[Wall] = []
    for index, (i, j) in enumerate(((0, 1), (0, 2), (1, 2))):
        on_edge = tuple(wall for wall in walls
                        if abs(wall.slack(vertices[i])) <= VERTEX_TOL
                        and abs(wall.slack(vertices[j])) <= VERTEX_TOL)
        if not on_edge:
            raise CatalogIntegrityError(f"{action.id}: no wall supports edge {index}")
        edges.append(Edge(index, vertices[i], vertices[j], (i, j), on_edge[0], on_edge))
        active.extend(on_edge)

    simplex = OrbitSimplex(
        action_id=action.id,
        vertices=tuple(vertices),
        edges=tuple(edges),
        walls=tuple(CandidateWall(wall, wall in active) for wall in walls),
    )
    logger.debug(f"Built simplex for {action.id}: {', '.join(str(v) for v in vertices)}")
    return simplex


def roots_span_plane(action: HermannActionSpec) -> bool:
    vectors = action.root_table.vectors
    return len(vectors) >= 2 and np.linalg.matrix_rank(vectors, tol=1e-9) == 2


_CATALOG: Optional[Tuple[HermannActionSpec, ...]] = None


def load_catalog() -> List[HermannActionSpec]:
    """
    Return every catalog row in its fixed order.

    Returns:
        List of action specs, parametric rows at their preset values
    """
    global _CATALOG
    if _CATALOG is None:
        from core.catalog_data import CATALOG_ROWS

        ids = [action.id for action in CATALOG_ROWS]
        if len(ids) != len(set(ids)):
            raise CatalogIntegrityError("Duplicate action ids in embedded catalog")
        _CATALOG = tuple(CATALOG_ROWS)
        logger.debug(f"Loaded {len(_CATALOG)} catalog rows")
    return list(_CATALOG)


def find_action(action_id: str,
                actions: Optional[Sequence[HermannActionSpec]] = None) -> HermannActionSpec:
    """
    Look up an action by id.

    Raises:
        UnknownActionError: If no row carries the id
    """
    for action in actions if actions is not None else load_catalog():
        if action.id == action_id:
            return action
    raise UnknownActionError(f"Unknown action id: {action_id}")


def instantiate(action: HermannActionSpec, **params: int) -> HermannActionSpec:
    """
    Re-evaluate a parametric row at other parameter values.

    Args:
        action: Parametric catalog row
        **params: New values for q and/or j

    Returns:
        New spec without golden data, id suffixed with the parameter values

    Raises:
        CatalogIntegrityError: If the row is not parametric, a parameter is
            unknown or below its minimum, a multiplicity turns negative, or
            the orbit space stops being a triangle
    """
    if not action.params:
        raise CatalogIntegrityError(f"{action.id} has no parameters")

    known = {param.name for param in action.params}
    unknown = sorted(set(params) - known)
    if unknown:
        raise CatalogIntegrityError(f"{action.id} has no parameter(s) {', '.join(unknown)}")

    updated = tuple(replace(param, value=int(params.get(param.name, param.value)))
                    for param in action.params)
    for param in updated:
        if param.value < param.minimum:
            raise CatalogIntegrityError(
                f"{action.id}: {param.name}={param.value} is below the minimum {param.minimum}")

    suffix = ",".join(f"{param.name}={param.value}" for param in updated)
    instance = replace(action, id=f"{action.id.split('[')[0]}[{suffix}]",
                       params=updated, table31=None)
    if not roots_span_plane(instance):
        raise CatalogIntegrityError(f"{instance.id}: roots do not span the plane")
    build_simplex(instance)
    return instance


def _golden_to_dict(point: Optional[GoldenPoint]) -> Optional[Dict[str, Any]]:
    if point is None:
        return None
    return {"x1": point.x1, "x2": point.x2, "exact": point.exact, "note": point.note}


def _golden_from_dict(data: Optional[Dict[str, Any]]) -> Optional[GoldenPoint]:
    if data is None:
        return None
    return GoldenPoint(float(data["x1"]), float(data["x2"]),
                       bool(data.get("exact", False)), data.get("note"))


def action_to_dict(action: HermannActionSpec) -> Dict[str, Any]:
    """Serialize one action to the catalog JSON schema."""
    table31 = None
    if action.table31 is not None:
        table31 = {
            "interior": _golden_to_dict(action.table31.interior),
            "edges": [_golden_to_dict(point) for point in action.table31.edges],
        }
    return {
        "id": action.id,
        "display_name": action.display_name,
        "dual_name": action.dual_name,
        "l_star_name": action.l_star_name,
        "kind": action.kind.value,
        "basis": [list(vector) for vector in action.kind.basis],
        "roots": [
            {
                "p": root.coeff_alpha,
                "q": root.coeff_beta,
                "mult_total": root.mult_total.to_json(),
                "mult_v": root.mult_v.to_json(),
                "mult_h": root.mult_h.to_json(),
            }
            for root in action.roots
        ],
        "params": {param.name: {"value": param.value, "minimum": param.minimum}
                   for param in action.params},
        "table31": table31,
        "known_inconsistencies": list(action.known_inconsistencies),
    }


def action_from_dict(data: Dict[str, Any]) -> HermannActionSpec:
    """
    Rebuild an action from its catalog JSON entry.

    Raises:
        CatalogIntegrityError: If a field is missing or the basis does not match the kind
    """
    try:
        kind = RootSystemKind(data["kind"])
        basis = tuple(tuple(float(c) for c in vector) for vector in data["basis"])
        if basis != kind.basis:
            raise CatalogIntegrityError(f"{data['id']}: basis {basis} does not match {kind}")

        roots = tuple(
            PositiveRoot(int(entry["p"]), int(entry["q"]),
                         Multiplicity.parse(entry["mult_total"]),
                         Multiplicity.parse(entry["mult_v"]),
                         Multiplicity.parse(entry["mult_h"]))
            for entry in data["roots"]
        )
        for root in roots:
            root_vector(kind, root)

        params = tuple(ParamSpec(name, int(spec["value"]), int(spec["minimum"]))
                       for name, spec in data.get("params", {}).items())

        table31 = None
        if data.get("table31") is not None:
            table31 = Table31Golden(
                interior=_golden_from_dict(data["table31"].get("interior")),
                edges=tuple(_golden_from_dict(point) for point in data["table31"].get("edges", [])),
            )

        return HermannActionSpec(
            id=data["id"],
            display_name=data["display_name"],
            kind=kind,
            roots=roots,
            dual_name=data.get("dual_name", ""),
            l_star_name=data.get("l_star_name", ""),
            params=params,
            table31=table31,
            known_inconsistencies=tuple(data.get("known_inconsistencies", [])),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise CatalogIntegrityError(f"Malformed catalog entry: {e}")


def export_catalog(actions: Optional[Sequence[HermannActionSpec]] = None) -> str:
    """Serialize actions (default: the whole catalog) to the JSON document."""
    actions = load_catalog() if actions is None else actions
    document = {"actions": [action_to_dict(action) for action in actions]}
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def import_catalog(text: str) -> List[HermannActionSpec]:
    """
    Parse a catalog JSON document.

    Raises:
        CatalogIntegrityError: If the document is not valid catalog JSON
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise CatalogIntegrityError(f"Catalog document is not valid JSON: {e}")
    if not isinstance(document, dict) or not isinstance(document.get("actions"), list):
        raise CatalogIntegrityError("Catalog document needs a top-level 'actions' list")
    return [action_from_dict(entry) for entry in document["actions"]]
