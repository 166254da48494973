#!/usr/bin/env python3
"""
Tests for the verification harness.
"""

import pytest

from core.catalog import find_action
from core.status import CheckStatus
from core.verification import SUITES, VerificationHarness, run_verification


def test_rho1_passes_every_suite(rho1):
    report = run_verification(actions=[rho1])
    assert {record.suite for record in report.records} == set(SUITES)
    assert all(record.status == CheckStatus.PASS for record in report.records)
    checks = {(record.suite, record.check) for record in report.records}
    assert ("field", "h-norm") in checks
    assert ("oracle", "boundary α=0") in checks
    assert not report.failed


def test_missing_golden_is_derived():
    report = run_verification(actions=[find_action("rho9_Sp2_Sp2Sp2_Sp2")], suites=["table31"])
    assert [record.status for record in report.records] == [CheckStatus.DERIVED]
    assert report.counts()["derived"] == 1


def test_flagged_rows_do_not_fail():
    actions = [find_action("rho2_Sp3_SU6_Sp3"), find_action("rho13_F4_E6_F4")]
    report = run_verification(actions=actions, suites=["oracle"])
    assert [record.status for record in report.records] == [CheckStatus.FLAGGED, CheckStatus.FLAGGED]
    assert not report.failed


def test_records_do_not_depend_on_worker_count():
    actions = [find_action(action_id) for action_id in
               ("rho1_SO3_SU3_SO3", "SO6_SU6_Sp3", "rho8_Sp2_Sp2Sp2_Sp2", "rho14_SO4_G2_SO4")]
    serial = VerificationHarness({"verify": {"workers": 1}}, ["simplex", "table31"]).run(actions)
    parallel = VerificationHarness({"verify": {"workers": 4}}, ["simplex", "table31"]).run(actions)
    assert serial.records == parallel.records


def test_whole_catalog_has_no_failures():
    report = run_verification({"verify": {"oracle_samples": 100, "field_samples": 10}})
    counts = report.counts()
    assert counts["fail"] == 0, [str(r.as_row()) for r in report.records if r.status == CheckStatus.FAIL]
    assert counts["pass"] > 0 and counts["flagged"] > 0 and counts["derived"] > 0


def test_unknown_suite_is_rejected():
    with pytest.raises(ValueError):
        VerificationHarness(suites=["nope"])
