# tests/test_report.py

import json

from reportlab.lib.pagesizes import A4
from reportlab.pdfgen import canvas

from lieinv.models import Status, VerificationRecord
from lieinv.report import format_table, json_line, next_line, wrap_text, write_pdf


def _records():
    return [
        VerificationRecord(table="2.1", case="a4", status=Status.MATCH, computed="g' = 0"),
        VerificationRecord(table="5.1", case="d4_lambda", params="lam=2", status=Status.PAPER_TYPO_SUSPECTED,
                           computed="-a12_34**2 + a14*a23", expected="a14*(e14 + e23)",
                           notes="tied coefficients " * 20),
    ]


def test_json_line_is_sorted_and_stable():
    line = json_line(_records()[1])
    data = json.loads(line)
    assert list(data) == sorted(data)
    assert data["status"] == "PAPER_TYPO_SUSPECTED"
    assert json_line(_records()[1]) == line


def test_format_table_aligns_columns():
    lines = format_table([["a", "bbb"], ["cccc", "d"]], ["x", "y"])
    assert lines[0].startswith("x     y")
    assert lines[2].index("bbb") == lines[3].index("d")


def test_wrap_text():
    lines = wrap_text("one two three four five", 9)
    assert lines == ["one two", "three", "four five"]
    assert wrap_text("", 10) == []


def test_pdf_written(tmp_path):
    path = write_pdf(_records() * 30, tmp_path / "report.pdf")
    assert path.read_bytes().startswith(b"%PDF")


def test_next_line_breaks_page_at_bottom_margin(tmp_path):
    c = canvas.Canvas(str(tmp_path / "page.pdf"), pagesize=A4)
    assert next_line(c, 500, 14, "Helvetica", 10) == 486
    assert c.getPageNumber() == 1
    assert next_line(c, 90, 14, "Helvetica", 10) == A4[1] - 40
    assert c.getPageNumber() == 2


def test_pdf_with_every_table_in_summary(tmp_path):
    tables = ["2.1", "3.3", "3.5", "4.2", "4.3", "4.5", "5.1", "cross"]
    records = [
        VerificationRecord(table=t, case=f"case{i}", status=s, computed="x", expected="y",
                           notes="n " * 80)
        for t in tables for i, s in enumerate(Status)
    ] * 5
    path = write_pdf(records, tmp_path / "long.pdf")
    assert path.read_bytes().startswith(b"%PDF")
