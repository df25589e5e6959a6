# lieinv/report.py

"""
verify 결과 출력

- 텍스트 : 정렬된 표 (click.echo)
- JSON   : 레코드당 한 줄 (sort_keys, 고정 필드)
- PDF    : reportlab canvas 요약
"""

import json
import logging
import os
from pathlib import Path
from typing import Iterable, List, Sequence

import click
from reportlab.lib.pagesizes import A4
from reportlab.pdfbase import pdfmetrics
from reportlab.pdfbase.ttfonts import TTFont
from reportlab.pdfgen import canvas

from lieinv.models import RunSummary, Status, VerificationRecord

log = logging.getLogger("lieinv.report")

STATUS_COLORS = {
    Status.MATCH: "green",
    Status.SKIPPED: "blue",
    Status.PAPER_TYPO_SUSPECTED: "yellow",
    Status.MISMATCH: "red",
}


# ---------- JSON lines ----------

def json_line(record: VerificationRecord) -> str:
    return json.dumps(record.to_json_dict(), sort_keys=True, ensure_ascii=False)


def write_json_lines(records: Iterable[VerificationRecord], echo=click.echo) -> None:
    for r in records:
        echo(json_line(r))


# ---------- 텍스트 ----------

def _shorten(text: str, width: int) -> str:
    return text if len(text) <= width else text[: width - 3] + "..."


def format_table(rows: Sequence[Sequence[str]], headers: Sequence[str]) -> List[str]:
    """열 너비를 맞춘 텍스트 표"""
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return lines


def write_text(records: Sequence[VerificationRecord], verbose: bool = False, width: int = 60) -> None:
    rows = []
    for r in records:
        detail = r.computed if r.status is Status.MATCH else f"{r.computed}  (table: {r.expected})"
        rows.append([r.table, r.case, r.params, r.status.value, _shorten(detail, width)])
    for i, line in enumerate(format_table(rows, ["table", "case", "params", "status", "detail"])):
        if i >= 2:
            status = records[i - 2].status
            click.secho(line, fg=STATUS_COLORS[status] if status is not Status.MATCH else None)
        else:
            click.echo(line)
        if verbose and i >= 2 and records[i - 2].notes:
            click.echo(f"    notes: {records[i - 2].notes}")
    write_summary(RunSummary.of(list(records)))


def write_summary(summary: RunSummary) -> None:
    counts = ", ".join(f"{k}={v}" for k, v in summary.counts.items())
    click.echo(f"\n{summary.total} record(s): {counts}")


# ---------- PDF ----------

def register_font() -> str:
    """한글이 들어갈 수 있는 TTF 가 있으면 등록, 없으면 Helvetica"""
    candidates = [
        os.getenv("LIEINV_PDF_FONT", ""),
        "/usr/share/fonts/truetype/nanum/NanumGothic.ttf",
        r"C:\Windows\Fonts\malgun.ttf",
    ]
    for path in candidates:
        if path and os.path.exists(path):
            try:
                pdfmetrics.registerFont(TTFont("LieInvFont", path))
                return "LieInvFont"
            except Exception as e:  # 깨진 폰트 파일
                log.warning("cannot register font %s: %s", path, e)
    return "Helvetica"


def wrap_text(text: str, width: int) -> List[str]:
    words = text.split()
    lines, cur = [], ""
    for w in words:
        if len(cur) + len(w) + 1 <= width:
            cur = (cur + " " + w).strip()
        else:
            if cur:
                lines.append(cur)
            cur = w
    if cur:
        lines.append(cur)
    return lines


def next_line(c: canvas.Canvas, y: float, step: float, font_name: str, size: int) -> float:
    """y 를 step 만큼 내리고, 하단 여백에 닿으면 새 페이지의 맨 위 y 를 돌려준다."""
    y -= step
    if y < 80:
        c.showPage()
        c.setFont(font_name, size)
        y = A4[1] - 40
    return y


def write_pdf(records: Sequence[VerificationRecord], path: Path, title: str = "lieinv verification report") -> Path:
    c = canvas.Canvas(str(path), pagesize=A4)
    width, height = A4
    font_name = register_font()

    y = height - 40
    c.setFont(font_name, 16)
    c.drawString(40, y, title)
    y -= 24

    # 요약
    summary = RunSummary.of(list(records))
    c.setFont(font_name, 12)
    c.drawString(40, y, f"Summary: {summary.total} record(s)")
    y -= 16
    c.setFont(font_name, 10)
    for status, count in summary.counts.items():
        c.drawString(50, y, f"- {status}: {count}")
        y = next_line(c, y, 14, font_name, 10)
    y -= 6
    for table, counts in summary.by_table.items():
        text = ", ".join(f"{k}={v}" for k, v in counts.items() if v)
        c.drawString(50, y, f"table {table}: {text}")
        y = next_line(c, y, 14, font_name, 10)

    # MATCH 가 아닌 레코드
    y -= 10
    c.setFont(font_name, 12)
    c.drawString(40, y, "Records needing attention:")
    y -= 16
    c.setFont(font_name, 9)
    for r in records:
        if r.status is Status.MATCH:
            continue
        head = f"[{r.status.value}] {r.table} {r.case}" + (f" ({r.params})" if r.params else "")
        c.drawString(45, y, head)
        y = next_line(c, y, 12, font_name, 9)
        for label, value in (("computed", r.computed), ("table", r.expected), ("notes", r.notes)):
            if not value:
                continue
            for line in wrap_text(f"{label}: {value}", 100):
                c.drawString(55, y, line)
                y = next_line(c, y, 11, font_name, 9)
        y = next_line(c, y, 4, font_name, 9)

    c.showPage()
    c.save()
    log.info("pdf written to %s", path)
    return Path(path)
