#!/usr/bin/env python3
"""
Tests for the explicit-formula oracle.
"""

import math

import numpy as np
import pytest

from core.catalog import PointInB, build_simplex, find_action, instantiate, load_catalog
from core.errors import OutsideDomainError
from core.oracle import (
    FIELD_TOL,
    Summand,
    catalog_summands,
    compare_boundary_fields,
    compare_fields,
    explicit_field,
    explicit_formula,
    has_boundary_formulas,
    sample_interior,
    term_discrepancies,
)
from core.status import CheckStatus

ALL_IDS = [action.id for action in load_catalog()]
FLAGGED_IDS = {
    "rho2_Sp3_SU6_Sp3", "SOq2_SUq2_SU2Uq", "SO4_SU4_SU2U2", "SUj1Uqj1_SUq2_SU2Uq",
    "SO4SO4_SO8_U4", "SO4SO6_SO10_U5", "SO5SO5_SO10_U5", "SO2sqSO3sq_SO5SO5_SO5",
    "SU6SU2_E6_Spin10U1", "rho12_Spin10U1_E6_Spin10U1", "rho13_F4_E6_F4",
    "rho14_SO4_G2_SO4", "rho15_SO4_G2_SO4", "rho16_G2_G2G2_G2", "SU2p4_G2G2_G2",
}


def test_summand_normalization():
    term = Summand(-2.0, "tan", -1.0, 1.0)
    normal = term.normalized()
    assert normal == Summand(2.0, "tan", 1.0, -1.0)
    assert normal.evaluate(0.4, 0.1) == pytest.approx(term.evaluate(0.4, 0.1))
    assert str(Summand(-1.0, "cot", 2.0, 0.0)) == "-cot(2x)"


def test_rho1_formula_matches_catalog(rho1):
    formula = explicit_formula(rho1)
    assert not formula.flagged
    point = PointInB(0.3, 0.2)
    np.testing.assert_allclose(explicit_field(rho1, point), formula.evaluate(0.3, 0.2))
    assert term_discrepancies(rho1) == []


def test_printed_domain_is_enforced(rho1):
    with pytest.raises(OutsideDomainError):
        explicit_field(rho1, PointInB(-0.1, 0.0))


@pytest.mark.parametrize("action_id", ALL_IDS)
def test_compare_fields_status(action_id):
    comparison = compare_fields(find_action(action_id), n_samples=100)
    assert comparison.samples == 100
    if action_id in FLAGGED_IDS:
        assert comparison.status == CheckStatus.FLAGGED
        assert comparison.flagged_terms
    else:
        assert comparison.status == CheckStatus.PASS, comparison.max_deviation
        assert comparison.max_deviation < FIELD_TOL
        assert comparison.discrepancies == []


@pytest.mark.parametrize("action_id", ["rho2_Sp3_SU6_Sp3", "rho13_F4_E6_F4"])
def test_flagged_rows_report_terms(action_id):
    comparison = compare_fields(find_action(action_id))
    assert comparison.discrepancies
    for term in comparison.discrepancies:
        assert term.component in ("x", "y")
        assert abs(term.printed - term.predicted) > 1e-9
        assert "printed" in str(term)


def test_catalog_summands_cover_every_root(rho1):
    x_terms, y_terms = catalog_summands(rho1)
    assert len(x_terms) == len(y_terms) == 3
    functions = sorted(term.function for term in x_terms)
    assert functions == ["cot", "tan", "tan"]


def test_parametric_formula_follows_parameters():
    instance = instantiate(find_action("SOj1SOqj1_SOq2_SO2SOq"), q=6, j=3)
    assert compare_fields(instance, n_samples=30).status == CheckStatus.PASS


def test_sample_interior_is_deterministic_and_inside(rho1):
    first = sample_interior(rho1, 40)
    assert first == sample_interior(rho1, 40)
    simplex = build_simplex(rho1)
    assert all(simplex.clearance(point) > 0.0 for point in first)
    with pytest.raises(ValueError):
        sample_interior(rho1, 0)


def test_rho1_boundary_formulas(rho1):
    assert has_boundary_formulas(rho1)
    results = compare_boundary_fields(rho1)
    assert [result.wall_label for result in results] == ["α=0", "β=-π/2", "α+β=π/2"]
    assert all(result.status == CheckStatus.PASS for result in results)
    assert not has_boundary_formulas(find_action("SO6_SU6_Sp3"))
