# lieinv/tables.py

"""
분류표 데이터 (lieinv/data/paper_tables.yaml)

YAML → pydantic 모델. 행마다
  label   : 인쇄된 표기
  case    : catalog case id
  when    : 파라미터 조건 (sympy 불리언, 기본 True)
  suspected / alt_* : 인쇄 오류가 의심되는 행과 대안 읽기
"""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import yaml
from pydantic import BaseModel, Field, ValidationError

from lieinv.catalog import CATALOG_CONFIG, normalize_params
from lieinv.complex_structures import SubalgebraTemplate
from lieinv.config import get_settings
from lieinv.errors import LieInvError, TablesError
from lieinv.symbolic import parse_expr, truth

log = logging.getLogger("lieinv.tables")

TABLE_IDS: Tuple[str, ...] = ("2.1", "3.3", "4.2", "4.3", "4.5", "5.1")


# ---------- 스키마 ----------

class CaseRef(BaseModel):
    case: str
    params: Dict[str, str] = Field(default_factory=dict)


class TableRow(BaseModel):
    label: str
    case: str
    when: str = "True"
    alt_when: Optional[str] = None
    suspected: str = ""
    printed: bool = True
    alt_cases: List[CaseRef] = Field(default_factory=list)

    def applies(self, case_id: str, params) -> bool:
        return self.case == case_id and truth(parse_expr(self.when), params)

    def applies_alt(self, case_id: str, params) -> bool:
        if self.alt_when is None or self.case != case_id:
            return False
        return truth(parse_expr(self.alt_when), params)


class SubalgebraEntry(BaseModel):
    U: str
    V: str
    alt_U: Optional[str] = None
    alt_V: Optional[str] = None

    @property
    def has_alt(self) -> bool:
        return self.alt_U is not None and self.alt_V is not None


class TemplateEntry(BaseModel):
    id: str
    U: str
    V: str
    nonzero: Optional[str] = None
    alt_U: Optional[str] = None
    alt_V: Optional[str] = None
    alt_nonzero: Optional[str] = None

    @property
    def has_alt(self) -> bool:
        return any(x is not None for x in (self.alt_U, self.alt_V, self.alt_nonzero))


class ComplexRow(TableRow):
    q: List[SubalgebraEntry] = Field(default_factory=list)
    templates: List[TemplateEntry] = Field(default_factory=list)


class FormRow(TableRow):
    form: str
    nonzero: Optional[str] = None
    alt_form: Optional[str] = None
    alt_nonzero: Optional[str] = None


class CohomologyRow(TableRow):
    h1: List[str] = Field(default_factory=list)
    h2: List[str] = Field(default_factory=list)
    h3: List[str] = Field(default_factory=list)

    def classes(self, degree: int) -> List[str]:
        return {1: self.h1, 2: self.h2, 3: self.h3}[degree]


class KahlerEntry(BaseModel):
    name: str
    J: str
    form: str
    nonzero: Optional[str] = None
    alt_form: Optional[str] = None
    alt_nonzero: Optional[str] = None
    suspected: str = ""


class KahlerRow(TableRow):
    structures: List[KahlerEntry] = Field(default_factory=list)


class RemarkLists(BaseModel):
    abelian: List[str]
    biinvariant: List[str]


class PaperTables(BaseModel):
    version: str
    table_3_3: List[ComplexRow]
    table_4_2: List[FormRow]
    table_4_3: List[FormRow]
    table_4_5: List[CohomologyRow]
    table_5_1: List[KahlerRow]
    remark_3_5: RemarkLists

    def rows(self, table_id: str) -> List[TableRow]:
        return {
            "3.3": self.table_3_3,
            "4.2": self.table_4_2,
            "4.3": self.table_4_3,
            "4.5": self.table_4_5,
            "5.1": self.table_5_1,
        }[table_id]


# ---------- 로드 ----------

def _check(tables: PaperTables) -> None:
    for table_id in TABLE_IDS[1:]:
        for row in tables.rows(table_id):
            if row.case not in CATALOG_CONFIG:
                raise TablesError(f"table {table_id} row {row.label}: unknown case {row.case}")
            parse_expr(row.when)
            if row.alt_when:
                parse_expr(row.alt_when)
            for ref in row.alt_cases:
                try:
                    normalize_params(ref.case, ref.params)
                except LieInvError as e:
                    raise TablesError(f"table {table_id} row {row.label}: {e}") from e


@lru_cache(maxsize=4)
def _load(path: str) -> PaperTables:
    try:
        with open(path, encoding="utf-8") as f:
            raw = yaml.safe_load(f)
    except OSError as e:
        raise TablesError(f"cannot read tables file {path}: {e.strerror}") from e
    except yaml.YAMLError as e:
        raise TablesError(f"tables file {path} is not valid YAML: {e}") from e
    try:
        tables = PaperTables(**raw)
    except (ValidationError, TypeError) as e:
        raise TablesError(f"tables file {path} does not match the schema: {e}") from e
    _check(tables)
    log.debug("tables %s loaded from %s", tables.version, path)
    return tables


def load_tables(path: Optional[Path] = None) -> PaperTables:
    return _load(str(path or get_settings().tables_path))


# ---------- 행 선택 ----------

def rows_for(rows: Sequence[TableRow], case_id: str, params) -> List[TableRow]:
    return [r for r in rows if r.applies(case_id, params)]


def alt_rows_for(rows: Sequence[TableRow], case_id: str, params) -> List[TableRow]:
    """대안 조건으로만 해당되는 행"""
    return [r for r in rows if not r.applies(case_id, params) and r.applies_alt(case_id, params)]


def templates_of(row: ComplexRow, alt: bool = False) -> List[SubalgebraTemplate]:
    """ε 전개 후의 템플릿 목록. alt=True 면 대안 읽기가 있는 템플릿만 대안으로."""
    out: List[SubalgebraTemplate] = []
    for t in row.templates:
        if alt and not t.has_alt:
            continue
        U = t.alt_U if alt and t.alt_U else t.U
        V = t.alt_V if alt and t.alt_V else t.V
        nonzero = t.alt_nonzero if alt and t.alt_nonzero else t.nonzero
        template = SubalgebraTemplate(
            case=row.case,
            template_id=f"{t.id}'" if alt else t.id,
            U=parse_expr(U),
            V=parse_expr(V),
            nonzero=None if nonzero is None else parse_expr(nonzero),
            suspected=row.suspected,
        )
        out.extend(template.expand_eps())
    return out


def templates_for(tables: PaperTables, case_id: str, params) -> List[SubalgebraTemplate]:
    """파라미터에서 해당되는 Table 3.3 행들의 템플릿"""
    out: List[SubalgebraTemplate] = []
    for row in rows_for(tables.table_3_3, case_id, params):
        out.extend(templates_of(row))
    return out
