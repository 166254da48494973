"""
Catalog Lint

Consistency checks over the catalog rows: multiplicity bookkeeping, the
shape of each orbit simplex, agreement with the printed domain of the
explicit formula and tangency of the boundary field along every edge.
"""

import logging
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Set

import numpy as np

from core.catalog import HermannActionSpec, PointInB, build_simplex, load_catalog, roots_span_plane
from core.errors import CatalogIntegrityError
from core.field import normal_component
from core.oracle_data import printed_row
from core.status import CheckStatus


TANGENCY_TOL = 1e-10

_NOTE_SPLIT = re.compile(r"[\s,;:()]+")

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LintFinding:
    action_id: str
    category: str
    message: str
    status: CheckStatus

    def __str__(self) -> str:
        return f"[{self.status}] {self.action_id} {self.category}: {self.message}"


@dataclass
class LintReport:
    checked: int = 0
    findings: List[LintFinding] = field(default_factory=list)

    @property
    def status(self) -> CheckStatus:
        statuses = {finding.status for finding in self.findings}
        if CheckStatus.FAIL in statuses:
            return CheckStatus.FAIL
        if CheckStatus.FLAGGED in statuses:
            return CheckStatus.FLAGGED
        return CheckStatus.PASS

    def for_action(self, action_id: str) -> List[LintFinding]:
        return [finding for finding in self.findings if finding.action_id == action_id]


def _triangle_from_half_planes(half_planes) -> Optional[List[PointInB]]:
    corners = []
    for (a1, b1, c1), (a2, b2, c2) in combinations(half_planes, 2):
        matrix = np.array([[a1, b1], [a2, b2]])
        if abs(np.linalg.det(matrix)) < 1e-12:
            continue
        corners.append(PointInB.from_array(np.linalg.solve(matrix, [c1, c2])))
    return sorted(corners) if len(corners) == 3 else None


def documented_roots(action: HermannActionSpec) -> Set[str]:
    """Root labels named in the notes of a row."""
    return {token for note in action.known_inconsistencies for token in _NOTE_SPLIT.split(note) if token}


def lint_action(action: HermannActionSpec) -> List[LintFinding]:
    """Run every check on one row."""
    findings: List[LintFinding] = []
    documented = documented_roots(action)

    def report(category: str, message: str, status: CheckStatus) -> None:
        findings.append(LintFinding(action.id, category, message, status))

    values = action.param_values
    for root in action.roots:
        try:
            m_total = root.mult_total.evaluate(values)
            m_v = root.mult_v.evaluate(values)
            m_h = root.mult_h.evaluate(values)
        except CatalogIntegrityError as e:
            report("multiplicity", str(e), CheckStatus.FAIL)
            continue
        if min(m_total, m_v, m_h) < 0:
            report("negative-multiplicity", f"{root} evaluates negative", CheckStatus.FAIL)
        elif m_v + m_h != m_total:
            status = CheckStatus.FLAGGED if root.label in documented else CheckStatus.FAIL
            report("multiplicity-sum", f"{root.label}: V {m_v} + H {m_h} != total {m_total}", status)

    try:
        if not roots_span_plane(action):
            report("span", "roots do not span the plane", CheckStatus.FAIL)
        simplex = build_simplex(action)
    except CatalogIntegrityError as e:
        report("triangle", str(e), CheckStatus.FAIL)
        return findings

    row = printed_row(action.id)
    if row is not None:
        printed = _triangle_from_half_planes(row.domain)
        matches = printed is not None and all(
            mine.distance_to(theirs) < 1e-9 for mine, theirs in zip(simplex.vertices, printed))
        if not matches:
            report("printed-domain",
                   f"simplex {', '.join(str(v) for v in simplex.vertices)} differs from printed {row.domain_text}",
                   CheckStatus.FLAGGED)

    for edge in simplex.edges:
        worst = max(abs(normal_component(action, edge, edge.point_at(edge.length * fraction)))
                    for fraction in (0.25, 0.5, 0.75))
        if worst >= TANGENCY_TOL:
            report("tangency", f"boundary field on {edge.wall.label} has normal component {worst:.3e}",
                   CheckStatus.FLAGGED)
    return findings


def lint_catalog(actions: Optional[Sequence[HermannActionSpec]] = None) -> LintReport:
    """
    Lint every row (default: the embedded catalog).

    Returns:
        Report whose status is FAIL on any structural defect
    """
    actions = load_catalog() if actions is None else actions
    report = LintReport()
    for action in actions:
        report.checked += 1
        report.findings.extend(lint_action(action))
    for finding in report.findings:
        if finding.status == CheckStatus.FAIL:
            logger.error(str(finding))
        else:
            logger.debug(str(finding))
    return report
