"""
lieinv.models 패키지

verify 결과를 담는 pydantic 모델들.

- Status             : MATCH < SKIPPED < PAPER_TYPO_SUSPECTED < MISMATCH (심각도 순)
- VerificationRecord : (표, case, 파라미터) 하나의 비교 결과
- RunSummary         : 상태별/표별 집계
"""

from .records import TABLE_ORDER, RunSummary, Status, VerificationRecord

__all__ = [
    "TABLE_ORDER",
    "RunSummary",
    "Status",
    "VerificationRecord",
]
