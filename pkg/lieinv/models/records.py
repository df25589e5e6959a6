# lieinv/models/records.py

from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, model_validator


class Status(str, Enum):
    MATCH = "MATCH"
    SKIPPED = "SKIPPED"
    PAPER_TYPO_SUSPECTED = "PAPER_TYPO_SUSPECTED"
    MISMATCH = "MISMATCH"

    @property
    def severity(self) -> int:
        return _SEVERITY[self]

    @classmethod
    def worst(cls, statuses) -> "Status":
        statuses = list(statuses)
        if not statuses:
            return cls.SKIPPED
        return max(statuses, key=lambda s: s.severity)


_SEVERITY = {
    Status.MATCH: 0,
    Status.SKIPPED: 1,
    Status.PAPER_TYPO_SUSPECTED: 2,
    Status.MISMATCH: 3,
}

# "3.5" 는 Remark 3.5, "cross" 는 교차 분류 요약
TABLE_ORDER = ("2.1", "3.3", "3.5", "4.2", "4.3", "4.5", "5.1", "cross")


class VerificationRecord(BaseModel):
    """
    verify 결과 한 줄. (table, case, params) 당 하나.
    MISMATCH / PAPER_TYPO_SUSPECTED 는 computed, expected 를 반드시 가진다.
    """

    table: str
    case: str
    params: str = ""
    status: Status
    computed: str = ""
    expected: str = ""
    notes: str = ""

    @model_validator(mode="after")
    def _values_for_problems(self):
        if self.table not in TABLE_ORDER:
            raise ValueError(f"unknown table id {self.table}")
        if self.status in (Status.MISMATCH, Status.PAPER_TYPO_SUSPECTED):
            if not self.computed or not self.expected:
                raise ValueError(f"{self.status.value} record needs both computed and expected values")
        return self

    def sort_key(self):
        return (TABLE_ORDER.index(self.table), self.case, self.params)

    def to_json_dict(self) -> Dict[str, str]:
        data = self.model_dump()
        data["status"] = self.status.value
        return data


class RunSummary(BaseModel):
    total: int = 0
    counts: Dict[str, int] = {}
    by_table: Dict[str, Dict[str, int]] = {}

    @classmethod
    def of(cls, records: List[VerificationRecord]) -> "RunSummary":
        counts = {s.value: 0 for s in Status}
        by_table: Dict[str, Dict[str, int]] = {}
        for r in records:
            counts[r.status.value] += 1
            row = by_table.setdefault(r.table, {s.value: 0 for s in Status})
            row[r.status.value] += 1
        return cls(total=len(records), counts=counts, by_table=by_table)
