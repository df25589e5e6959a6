# tests/test_verify.py

import pytest

from lieinv import verify
from lieinv.errors import EXIT_MISMATCH, EXIT_OK, LieInvError
from lieinv.models import TABLE_ORDER, Status, VerificationRecord
from lieinv.report import json_line
from lieinv.verify import (
    exit_code,
    kahler_witness,
    make_context,
    run_verification,
    verify_instance,
    verify_table_2_1,
    verify_table_4_2,
    verify_table_4_3,
    verify_table_4_5,
)


@pytest.fixture(scope="module")
def rh3_records():
    return run_verification(["rh3"], ctx=make_context())


def test_one_record_per_table(rh3_records):
    assert [r.table for r in rh3_records] == list(TABLE_ORDER)
    assert {r.case for r in rh3_records} == {"rh3"}


def test_rh3_rows_match(rh3_records):
    by_table = {r.table: r for r in rh3_records}
    for table in ("2.1", "4.2", "4.3", "4.5"):
        assert by_table[table].status is Status.MATCH, by_table[table]


def test_machine_report_is_deterministic(rh3_records):
    again = run_verification(["rh3"], ctx=make_context())
    assert [json_line(r) for r in again] == [json_line(r) for r in rh3_records]


@pytest.mark.parametrize("case_id,params", [
    ("a4", {}), ("n4", {}), ("r2r2", {}), ("r2p", {}),
])
def test_catalog_and_cohomology_rows(case_id, params):
    ctx = make_context()
    inst = ctx.instance(case_id, params)
    assert verify_table_2_1(inst, ctx).status is Status.MATCH
    assert verify_table_4_5(inst, ctx).status is not Status.MISMATCH


def test_exact_symplectic_rows():
    ctx = make_context()
    yes = verify_table_4_3(ctx.instance("r2p", {}), ctx)
    no = verify_table_4_3(ctx.instance("n4", {}), ctx)
    assert yes.status is not Status.MISMATCH
    assert no.status is not Status.MISMATCH


def test_symplectic_row_for_r2p():
    ctx = make_context()
    record = verify_table_4_2(ctx.instance("r2p", {}), ctx)
    assert record.status is Status.MATCH


def test_kahler_witness_on_r2p_and_not_on_n4():
    ctx = make_context()
    assert kahler_witness(ctx.instance("r2p", {}), ctx) is not None
    assert kahler_witness(ctx.instance("n4", {}), ctx) is None


def test_params_need_one_case():
    with pytest.raises(LieInvError):
        run_verification(["a4", "rh3"], params={"lam": 1}, ctx=make_context())


def test_exit_code_policy():
    match = VerificationRecord(table="2.1", case="a4", status=Status.MATCH)
    typo = VerificationRecord(table="4.5", case="d4", status=Status.PAPER_TYPO_SUSPECTED, computed="a", expected="b")
    bad = VerificationRecord(table="4.2", case="h4", status=Status.MISMATCH, computed="a", expected="b")
    assert exit_code([match, typo]) == EXIT_OK
    assert exit_code([match, typo], strict=True) == EXIT_MISMATCH
    assert exit_code([match, bad]) == EXIT_MISMATCH


def test_d4_lambda_one_derived_row_is_suspected_typo():
    ctx = make_context()
    record = verify_table_2_1(ctx.instance("d4_lambda", {"lam": 1}), ctx)
    assert record.status is Status.PAPER_TYPO_SUSPECTED
    assert "lam = 1" in record.notes
    other = verify_table_2_1(ctx.instance("d4_lambda", {"lam": 2}), ctx)
    assert other.status is Status.MATCH


def test_a4_has_no_cohomology_row_and_says_so():
    ctx = make_context()
    record = verify_table_4_5(ctx.instance("a4", {}), ctx)
    assert record.status is Status.SKIPPED
    assert "no cohomology row printed" in record.notes
    assert "b0, b1, b4" in record.notes


def test_crashing_check_becomes_mismatch_record(monkeypatch):
    def boom(inst, ctx):
        return 1 // 0

    monkeypatch.setattr(verify, "TABLE_CHECKS", (("2.1", boom), ("4.2", verify_table_4_2)))
    ctx = make_context()
    records = verify_instance(ctx.instance("r2p", {}), ctx)
    assert records[0].status is Status.MISMATCH
    assert "ZeroDivisionError" in records[0].computed
    assert records[1].status is Status.MATCH
