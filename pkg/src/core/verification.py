"""
Verification Harness

Runs every check suite over the catalog and collects one record per check:
catalog lint, simplex construction, printed equilibrium reproduction, the
explicit-formula oracle and numerical spot checks of the field module.
Actions are processed on a thread pool; records come back in catalog order
whatever the worker count.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from core.catalog import HermannActionSpec, PointInB, build_simplex, load_catalog
from core.errors import HermannFlowError, MissingGoldenError, UnsupportedError
from core.field import FRAME, field_at, jacobian, potential, second_fundamental_norm_sq, shape_spectrum
from core.lint import lint_action
from core.oracle import compare_boundary_fields, compare_fields, has_boundary_formulas, sample_interior
from core.solver import EquilibriumSolver, SolverSettings
from core.status import CheckStatus


SUITES = ("lint", "simplex", "table31", "oracle", "field")

GRADIENT_TOL = 1e-6
JACOBIAN_TOL = 1e-6
TRACE_TOL = 1e-10
MIN_EIGENVALUE = 1e-9
RHO1_ID = "rho1_SO3_SU3_SO3"


@dataclass(frozen=True)
class VerificationRecord:
    suite: str
    action_id: str
    check: str
    status: CheckStatus
    detail: str = ""

    def as_row(self) -> List[str]:
        return [self.suite, self.action_id, self.check, str(self.status), self.detail]


@dataclass
class VerificationReport:
    records: List[VerificationRecord] = field(default_factory=list)

    def counts(self) -> Dict[str, int]:
        totals = {status.value.lower(): 0 for status in CheckStatus}
        for record in self.records:
            totals[record.status.value.lower()] += 1
        return totals

    @property
    def failed(self) -> bool:
        return any(record.status == CheckStatus.FAIL for record in self.records)

    def by_suite(self, suite: str) -> List[VerificationRecord]:
        return [record for record in self.records if record.suite == suite]


def _point_text(point: PointInB) -> str:
    return f"({point.x1:.10g}, {point.x2:.10g})"


class VerificationHarness:
    """
    Runs the check suites for a list of actions.

    Args:
        config: Application configuration (``solver``, ``field`` and ``verify`` sections)
        suites: Subset of SUITES to run, all by default
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None, suites: Optional[Sequence[str]] = None):
        config = config or {}
        verify = config.get("verify", {})
        self.settings = SolverSettings.from_config(config)
        self.oracle_samples = int(verify.get("oracle_samples", 100))
        self.field_samples = int(verify.get("field_samples", 20))
        self.workers = max(1, int(verify.get("workers", 1)))
        self.suites = tuple(suites) if suites else SUITES
        unknown = sorted(set(self.suites) - set(SUITES))
        if unknown:
            raise ValueError(f"Unknown verification suite(s): {', '.join(unknown)}")
        self.logger = logging.getLogger(__name__)

    def run(self, actions: Optional[Sequence[HermannActionSpec]] = None) -> VerificationReport:
        actions = load_catalog() if actions is None else list(actions)
        self.logger.info(f"Verifying {len(actions)} actions with {self.workers} worker(s)")
        report = VerificationReport()
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            for records in pool.map(self.verify_action, actions):
                report.records.extend(records)
        self.logger.info(f"Verification summary: {report.counts()}")
        return report

    def verify_action(self, action: HermannActionSpec) -> List[VerificationRecord]:
        records: List[VerificationRecord] = []
        for suite in self.suites:
            try:
                records.extend(getattr(self, f"_{suite}")(action))
            except HermannFlowError as e:
                self.logger.error(f"{action.id} {suite}: {e}")
                records.append(VerificationRecord(suite, action.id, "run", CheckStatus.FAIL, str(e)))
        return records

    def _lint(self, action: HermannActionSpec) -> List[VerificationRecord]:
        findings = lint_action(action)
        if not findings:
            return [VerificationRecord("lint", action.id, "catalog", CheckStatus.PASS)]
        return [VerificationRecord("lint", action.id, finding.category, finding.status, finding.message)
                for finding in findings]

    def _simplex(self, action: HermannActionSpec) -> List[VerificationRecord]:
        simplex = build_simplex(action)
        vertices = ", ".join(_point_text(vertex) for vertex in simplex.vertices)
        return [VerificationRecord("simplex", action.id, "triangle", CheckStatus.PASS, vertices)]

    def _table31(self, action: HermannActionSpec) -> List[VerificationRecord]:
        solver = EquilibriumSolver(self.settings)
        try:
            comparison = solver.compare_with_golden(action)
        except MissingGoldenError:
            interior = solver.interior(action)
            return [VerificationRecord("table31", action.id, "interior", CheckStatus.DERIVED,
                                       f"computed {_point_text(interior.location)}")]

        records = []
        for record in comparison.records:
            detail = (f"printed ({record.golden.x1:.10g}, {record.golden.x2:.10g}) "
                      f"computed {_point_text(record.computed)} deviation {record.deviation:.3e}")
            if record.note and record.status != CheckStatus.PASS:
                detail += f"; {record.note}"
            records.append(VerificationRecord("table31", action.id, record.label, record.status, detail))
        return records

    def _oracle(self, action: HermannActionSpec) -> List[VerificationRecord]:
        records = []
        try:
            comparison = compare_fields(action, self.oracle_samples)
        except UnsupportedError as e:
            records.append(VerificationRecord("oracle", action.id, "interior", CheckStatus.DERIVED, str(e)))
        else:
            detail = f"max deviation {comparison.max_deviation:.3e}"
            if comparison.discrepancies:
                detail += "; " + "; ".join(str(term) for term in comparison.discrepancies)
            records.append(VerificationRecord("oracle", action.id, "interior", comparison.status, detail))

        if has_boundary_formulas(action):
            for boundary in compare_boundary_fields(action):
                records.append(VerificationRecord(
                    "oracle", action.id, f"boundary {boundary.wall_label}", boundary.status,
                    f"{boundary.formula_text} max deviation {boundary.max_deviation:.3e}"))
        return records

    def _field(self, action: HermannActionSpec) -> List[VerificationRecord]:
        simplex = build_simplex(action)
        points = sample_interior(action, self.field_samples, shrink=0.9)
        eps = self.settings.wall_eps

        gradient_error = jacobian_error = trace_error = 0.0
        min_eigenvalue = math.inf
        for point in points:
            step = min(1e-5, 1e-4 * simplex.clearance(point))
            vector = field_at(action, point, eps).vector
            matrix = jacobian(action, point, eps)

            for axis in range(2):
                offset = np.zeros(2)
                offset[axis] = step
                ahead = PointInB.from_array(point.as_array() + offset)
                behind = PointInB.from_array(point.as_array() - offset)
                slope = (potential(action, ahead, eps) - potential(action, behind, eps)) / (2 * step)
                gradient_error = max(gradient_error,
                                     abs(vector[axis] + slope) / max(1.0, abs(vector[axis])))
                column = (field_at(action, ahead, eps).vector - field_at(action, behind, eps).vector) / (2 * step)
                jacobian_error = max(jacobian_error,
                                     float(np.max(np.abs(matrix[:, axis] - column))) / max(1.0, np.max(np.abs(matrix))))

            min_eigenvalue = min(min_eigenvalue, float(np.min(np.linalg.eigvalsh(matrix))))
            for axis, direction in enumerate(FRAME):
                trace = shape_spectrum(action, point, direction, eps).weighted_trace
                trace_error = max(trace_error, abs(trace - vector[axis]) / max(1.0, abs(vector[axis])))

        records = [
            VerificationRecord("field", action.id, "gradient", _status(gradient_error <= GRADIENT_TOL),
                               f"max relative error {gradient_error:.3e}"),
            VerificationRecord("field", action.id, "jacobian", _status(jacobian_error <= JACOBIAN_TOL),
                               f"max relative error {jacobian_error:.3e}"),
            VerificationRecord("field", action.id, "positive-definite", _status(min_eigenvalue >= MIN_EIGENVALUE),
                               f"min eigenvalue {min_eigenvalue:.3e}"),
            VerificationRecord("field", action.id, "trace", _status(trace_error <= TRACE_TOL),
                               f"max relative error {trace_error:.3e}"),
        ]
        if action.id == RHO1_ID:
            value = second_fundamental_norm_sq(action, PointInB(math.pi / 6, 0.0), eps)
            records.append(VerificationRecord("field", action.id, "h-norm", _status(abs(value - 4.0) <= 1e-12),
                                              f"|h|^2 at (π/6, 0) = {value:.12g}"))
        return records


def _status(ok: bool) -> CheckStatus:
    return CheckStatus.PASS if ok else CheckStatus.FAIL


def run_verification(config: Optional[Dict[str, Any]] = None,
                     actions: Optional[Sequence[HermannActionSpec]] = None,
                     suites: Optional[Sequence[str]] = None) -> VerificationReport:
    """
    Run the verification suites.

    Args:
        config: Application configuration
        actions: Rows to check, the whole catalog by default
        suites: Subset of suite names

    Returns:
        Report with one record per check, in catalog order
    """
    return VerificationHarness(config, suites).run(actions)
