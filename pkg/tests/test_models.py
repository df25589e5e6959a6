# tests/test_models.py

import pytest
from pydantic import ValidationError

from lieinv.models import RunSummary, Status, VerificationRecord


def test_status_severity_order():
    assert Status.worst([Status.MATCH, Status.SKIPPED]) is Status.SKIPPED
    assert Status.worst([Status.PAPER_TYPO_SUSPECTED, Status.MATCH]) is Status.PAPER_TYPO_SUSPECTED
    assert Status.worst([Status.MISMATCH, Status.PAPER_TYPO_SUSPECTED]) is Status.MISMATCH
    assert Status.worst([]) is Status.SKIPPED


def test_problem_records_need_both_values():
    with pytest.raises(ValidationError):
        VerificationRecord(table="4.2", case="rh3", status=Status.MISMATCH, computed="x")
    with pytest.raises(ValidationError):
        VerificationRecord(table="5.1", case="h4", status=Status.PAPER_TYPO_SUSPECTED, expected="y")
    ok = VerificationRecord(table="4.2", case="rh3", status=Status.MATCH)
    assert ok.computed == ""


def test_unknown_table_id():
    with pytest.raises(ValidationError):
        VerificationRecord(table="9.9", case="rh3", status=Status.MATCH)


def test_sort_key_and_json_fields():
    a = VerificationRecord(table="4.5", case="a4", status=Status.MATCH)
    b = VerificationRecord(table="2.1", case="rh3", status=Status.MATCH)
    assert sorted([a, b], key=lambda r: r.sort_key()) == [b, a]
    assert set(a.to_json_dict()) == {"table", "case", "params", "status", "computed", "expected", "notes"}
    assert a.to_json_dict()["status"] == "MATCH"


def test_run_summary_counts():
    records = [
        VerificationRecord(table="2.1", case="a4", status=Status.MATCH),
        VerificationRecord(table="2.1", case="rh3", status=Status.SKIPPED),
        VerificationRecord(table="4.2", case="d4", status=Status.MISMATCH, computed="1", expected="2"),
    ]
    summary = RunSummary.of(records)
    assert summary.total == 3
    assert summary.counts["MATCH"] == 1
    assert summary.by_table["2.1"]["SKIPPED"] == 1
    assert summary.by_table["4.2"]["MISMATCH"] == 1
