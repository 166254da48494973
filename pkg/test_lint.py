#!/usr/bin/env python3
"""
Tests for the catalog lint.
"""

from dataclasses import replace

from core.catalog import Multiplicity, PositiveRoot, find_action
from core.lint import LintReport, lint_action, lint_catalog
from core.status import CheckStatus


def test_catalog_has_no_structural_defects():
    report = lint_catalog()
    assert isinstance(report, LintReport)
    assert report.checked == 36
    assert report.status != CheckStatus.FAIL
    assert not [finding for finding in report.findings if finding.status == CheckStatus.FAIL]


def test_rho1_is_clean(rho1):
    assert lint_action(rho1) == []


def test_non_tangent_boundary_field_is_reported():
    findings = lint_catalog().for_action("rho4_U4_SO8_U4")
    tangency = [finding for finding in findings if finding.category == "tangency"]
    assert len(tangency) == 1
    assert tangency[0].status == CheckStatus.FLAGGED
    assert "2α+β=π/2" in tangency[0].message


def test_documented_multiplicity_mismatch_is_flagged():
    findings = lint_action(find_action("Sp2Sp2_Sp4_Sp2Sp2"))
    sums = [finding for finding in findings if finding.category == "multiplicity-sum"]
    assert sums
    assert all(finding.status == CheckStatus.FLAGGED for finding in sums)


def test_printed_domain_mismatch_is_flagged():
    findings = lint_action(find_action("SO4_SU4_SU2U2"))
    assert any(finding.category == "printed-domain" for finding in findings)


def test_undocumented_defects_fail(rho1):
    broken_root = PositiveRoot(1, 0, Multiplicity.parse(2), Multiplicity.parse(1), Multiplicity.parse(0))
    broken = replace(rho1, id="broken_rho1", roots=(broken_root,) + rho1.roots[1:])
    findings = lint_action(broken)
    assert [finding.category for finding in findings] == ["multiplicity-sum"]
    assert findings[0].status == CheckStatus.FAIL

    negative_root = PositiveRoot(1, 0, Multiplicity.parse("q-4"), Multiplicity.parse("q-4"),
                                 Multiplicity.parse(0))
    negative = replace(find_action("SOq2_SUq2_SU2Uq"), id="negative",
                       roots=(negative_root,) + find_action("SOq2_SUq2_SU2Uq").roots[1:],
                       known_inconsistencies=())
    findings = lint_action(negative)
    assert findings[0].category == "negative-multiplicity"
    assert findings[0].status == CheckStatus.FAIL
    assert any(finding.category == "triangle" for finding in findings)


def test_notes_only_cover_the_roots_they_name():
    action = find_action("SU6SU2_E6_Spin10U1")
    sums = [finding for finding in lint_action(action) if finding.category == "multiplicity-sum"]
    assert [finding.status for finding in sums] == [CheckStatus.FLAGGED]
    assert sums[0].message.startswith("2α+β:")

    elsewhere = replace(action, known_inconsistencies=("H multiplicity of α+β is uncertain",))
    sums = [finding for finding in lint_action(elsewhere) if finding.category == "multiplicity-sum"]
    assert [finding.status for finding in sums] == [CheckStatus.FAIL]
