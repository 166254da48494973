"""
Explicit Formula Oracle

Evaluates the printed per-action field formulas literally and compares them
with the field built from the catalog root data. The comparison works on
values at low-discrepancy sample points and, to localize differences, on the
trigonometric summands themselves. Solver and flow never read these formulas.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.stats import qmc

from core.catalog import HermannActionSpec, Multiplicity, PointInB, build_simplex
from core.errors import OutsideDomainError, UnsupportedError
from core.field import field_at
from core.oracle_data import BOUNDARY_ROWS, PrintedRow, RawSummand, printed_row
from core.status import CheckStatus


FIELD_TOL = 1e-9
SQRT3 = math.sqrt(3.0)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Summand:
    """coefficient * fn(a*x + b*y) with fn in {tan, cot}."""

    coefficient: float
    function: str
    a: float
    b: float

    def evaluate(self, x1: float, x2: float) -> float:
        argument = self.a * x1 + self.b * x2
        value = math.tan(argument)
        return self.coefficient * (value if self.function == "tan" else 1.0 / value)

    def normalized(self) -> "Summand":
        """Flip the argument so its first nonzero coefficient is positive; tan and cot are odd."""
        lead = self.a if abs(self.a) > 1e-12 else self.b
        if lead < 0:
            return Summand(-self.coefficient, self.function, -self.a, -self.b)
        return self

    @property
    def key(self) -> Tuple[str, float, float]:
        return (self.function, round(self.a, 9) + 0.0, round(self.b, 9) + 0.0)

    def __str__(self) -> str:
        return f"{_format_number(self.coefficient, leading=True)}{self.function}({_format_argument(self.a, self.b)})"


def _format_number(value: float, leading: bool = False) -> str:
    """Coefficients as integers or integer multiples of √3."""
    sign = "-" if value < 0 else ("" if leading else "+")
    magnitude = abs(value)
    if abs(magnitude - round(magnitude)) < 1e-9:
        body = "" if round(magnitude) == 1 else str(int(round(magnitude)))
    elif abs(magnitude / SQRT3 - round(magnitude / SQRT3)) < 1e-9:
        multiple = int(round(magnitude / SQRT3))
        body = "√3" if multiple == 1 else f"{multiple}√3"
    else:
        body = f"{magnitude:.6g}"
    return f"{sign}{body}"


def _coefficient_text(value: float) -> str:
    if abs(value) < 1e-12:
        return "0"
    text = _format_number(value, leading=True)
    return text + "1" if text in ("", "-") else text


def _format_argument(a: float, b: float) -> str:
    parts = []
    for coeff, symbol in ((a, "x"), (b, "y")):
        if abs(coeff) < 1e-12:
            continue
        text = _format_number(coeff, leading=not parts)
        parts.append(f"{text}{symbol}")
    return "".join(parts) or "0"


@dataclass(frozen=True)
class TermDiscrepancy:
    """One trigonometric term whose printed and catalog coefficients differ."""

    component: str
    function: str
    a: float
    b: float
    printed: float
    predicted: float

    def __str__(self) -> str:
        argument = _format_argument(self.a, self.b)
        return (f"{self.component}: {self.function}({argument}) printed "
                f"{_coefficient_text(self.printed)} vs catalog {_coefficient_text(self.predicted)}")


@dataclass(frozen=True)
class ExplicitFormula:
    """The printed field formula of one action, resolved at its parameter values."""

    action_id: str
    x_terms: Tuple[Summand, ...]
    y_terms: Tuple[Summand, ...]
    domain: Tuple[Tuple[float, float, float], ...]
    domain_text: str
    flagged_terms: Tuple[str, ...] = ()

    @property
    def flagged(self) -> bool:
        return bool(self.flagged_terms)

    def evaluate(self, x1: float, x2: float) -> np.ndarray:
        return np.array([
            sum(term.evaluate(x1, x2) for term in self.x_terms),
            sum(term.evaluate(x1, x2) for term in self.y_terms),
        ])

    def in_domain(self, point: PointInB, tol: float = 0.0) -> bool:
        return all(a * point.x1 + b * point.x2 < c + tol for a, b, c in self.domain)


def _resolve(raw: Tuple[RawSummand, ...], scale: float, params: Dict[str, int]) -> Tuple[Summand, ...]:
    terms = []
    for coefficient, function, a, b in raw:
        if isinstance(coefficient, str):
            coefficient = Multiplicity.parse(coefficient).evaluate(params)
        terms.append(Summand(scale * float(coefficient), function, float(a), float(b)))
    return tuple(terms)


def explicit_formula(action: HermannActionSpec) -> ExplicitFormula:
    """
    Look up the printed formula of an action.

    Raises:
        UnsupportedError: If no formula was transcribed for the action
    """
    row: Optional[PrintedRow] = printed_row(action.id)
    if row is None:
        raise UnsupportedError(f"No printed field formula for {action.id}")
    params = action.param_values
    return ExplicitFormula(
        action_id=action.id,
        x_terms=_resolve(row.x_terms, row.scale, params),
        y_terms=_resolve(row.y_terms, row.scale, params),
        domain=row.domain,
        domain_text=row.domain_text,
        flagged_terms=row.flagged_terms,
    )


def explicit_field(action: HermannActionSpec, point: PointInB, check_domain: bool = True) -> np.ndarray:
    """
    Evaluate the printed formula verbatim.

    Raises:
        UnsupportedError: If no formula was transcribed for the action
        OutsideDomainError: If the point is not strictly inside the printed domain
    """
    formula = explicit_formula(action)
    if check_domain and not formula.in_domain(point):
        raise OutsideDomainError(f"{point} is outside the printed domain {formula.domain_text}")
    return formula.evaluate(point.x1, point.x2)


def _aggregate(terms: Tuple[Summand, ...]) -> Dict[Tuple[str, float, float], float]:
    totals: Dict[Tuple[str, float, float], float] = {}
    for term in terms:
        normal = term.normalized()
        totals[normal.key] = totals.get(normal.key, 0.0) + normal.coefficient
    return totals


def catalog_summands(action: HermannActionSpec) -> Tuple[Tuple[Summand, ...], Tuple[Summand, ...]]:
    """The summands the root data predict for each component."""
    table = action.root_table
    x_terms, y_terms = [], []
    for vector, m_v, m_h in zip(table.vectors, table.mult_v, table.mult_h):
        a, b = float(vector[0]), float(vector[1])
        if m_v > 0:
            x_terms.append(Summand(-m_v * a, "cot", a, b))
            y_terms.append(Summand(-m_v * b, "cot", a, b))
        if m_h > 0:
            x_terms.append(Summand(m_h * a, "tan", a, b))
            y_terms.append(Summand(m_h * b, "tan", a, b))
    return tuple(x_terms), tuple(y_terms)


def term_discrepancies(action: HermannActionSpec) -> List[TermDiscrepancy]:
    """Terms whose printed coefficient differs from the catalog prediction."""
    formula = explicit_formula(action)
    predicted_x, predicted_y = catalog_summands(action)
    found = []
    for component, printed, predicted in (("x", formula.x_terms, predicted_x),
                                          ("y", formula.y_terms, predicted_y)):
        printed_totals = _aggregate(printed)
        predicted_totals = _aggregate(predicted)
        for key in sorted(set(printed_totals) | set(predicted_totals)):
            left = printed_totals.get(key, 0.0)
            right = predicted_totals.get(key, 0.0)
            if abs(left - right) > 1e-9:
                found.append(TermDiscrepancy(component, key[0], key[1], key[2], left, right))
    return found


@dataclass
class FieldComparison:
    """Printed formula against the catalog field at sample points."""

    action_id: str
    samples: int
    max_deviation: float
    status: CheckStatus
    flagged_terms: Tuple[str, ...] = ()
    discrepancies: List[TermDiscrepancy] = field(default_factory=list)
    worst_point: Optional[PointInB] = None

    def __str__(self) -> str:
        return f"{self.action_id}: {self.status} (max deviation {self.max_deviation:.3e})"


def sample_interior(action: HermannActionSpec, n_samples: int, shrink: float = 0.98) -> List[PointInB]:
    """
    Deterministic low-discrepancy points inside the orbit simplex.

    Halton points of the unit square are folded onto the triangle and pulled
    toward the incenter so none sits on a wall.
    """
    if n_samples < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples}")
    simplex = build_simplex(action)
    a, b, c = (vertex.as_array() for vertex in simplex.vertices)
    center = simplex.incenter().as_array()
    unit = qmc.Halton(d=2, scramble=False).random(n_samples + 1)[1:]

    points = []
    for u, v in unit:
        root = math.sqrt(u)
        point = (1.0 - root) * a + root * (1.0 - v) * b + root * v * c
        points.append(PointInB.from_array(center + shrink * (point - center)))
    return points


def compare_fields(action: HermannActionSpec, n_samples: int = 100) -> FieldComparison:
    """
    Compare the printed formula with the catalog field.

    Samples lie in the catalog simplex; the printed domain is not enforced
    since several printed domains disagree with the root data.

    Raises:
        UnsupportedError: If no formula was transcribed for the action
    """
    formula = explicit_formula(action)
    worst, worst_point = 0.0, None
    for point in sample_interior(action, n_samples):
        expected = field_at(action, point).vector
        printed = formula.evaluate(point.x1, point.x2)
        deviation = float(np.max(np.abs(printed - expected)))
        if not math.isfinite(deviation) or deviation > worst:
            worst, worst_point = deviation, point

    if worst < FIELD_TOL:
        status = CheckStatus.PASS
    elif formula.flagged:
        status = CheckStatus.FLAGGED
    else:
        status = CheckStatus.FAIL

    discrepancies = term_discrepancies(action) if status != CheckStatus.PASS else []
    if status == CheckStatus.FAIL:
        logger.warning(f"{action.id}: printed formula deviates by {worst:.3e} at {worst_point}")
    elif status == CheckStatus.FLAGGED:
        logger.info(f"{action.id}: printed formula flagged ({len(discrepancies)} differing terms)")

    return FieldComparison(
        action_id=action.id,
        samples=n_samples,
        max_deviation=worst,
        status=status,
        flagged_terms=formula.flagged_terms,
        discrepancies=discrepancies,
        worst_point=worst_point,
    )


@dataclass(frozen=True)
class BoundaryComparison:
    action_id: str
    wall_label: str
    formula_text: str
    max_deviation: float
    status: CheckStatus


def compare_boundary_fields(action: HermannActionSpec, n_samples: int = 20) -> List[BoundaryComparison]:
    """
    Compare printed boundary fields with the field on the matching edges.

    Raises:
        UnsupportedError: If no boundary formulas were transcribed for the action
    """
    rows = BOUNDARY_ROWS.get(action.id.split("[")[0])
    if rows is None:
        raise UnsupportedError(f"No printed boundary fields for {action.id}")

    simplex = build_simplex(action)
    results = []
    for row in rows:
        edge = next((edge for edge in simplex.edges
                     if any(wall.label == row.wall_label for wall in edge.coincident_walls)), None)
        if edge is None:
            raise UnsupportedError(f"{action.id}: no edge lies on {row.wall_label}")

        x_terms = _resolve(row.x_terms, 1.0, {})
        y_terms = _resolve(row.y_terms, 1.0, {})
        worst = 0.0
        for step in range(1, n_samples + 1):
            point = edge.point_at(edge.length * step / (n_samples + 1))
            printed = np.array([sum(t.evaluate(*point) for t in x_terms),
                                sum(t.evaluate(*point) for t in y_terms)])
            worst = max(worst, float(np.max(np.abs(printed - field_at(action, point).vector))))
        status = CheckStatus.PASS if worst < FIELD_TOL else CheckStatus.FAIL
        results.append(BoundaryComparison(action.id, row.wall_label, row.text, worst, status))
    return results


def has_boundary_formulas(action: HermannActionSpec) -> bool:
    return action.id.split("[")[0] in BOUNDARY_ROWS
