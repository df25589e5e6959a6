# lieinv/parsing.py

"""
텍스트 입력 파서

1) Lie 대수 파일 (한 줄에 괄호 하나)
     dim 4
     [1,2] = 1*3
     [4,1] = 1/2*1 , -1*2
   '#' 뒤는 주석. 적히지 않은 괄호는 0, 반대칭 짝은 자동. 같은 (i,j) 두 번은 오류.

2) 형식 리터럴      : 1*e12 + -3/2*e134   (인덱스는 한 자리, n ≤ 9)
3) J 리터럴         : J: e1->e2, e3->e4   (나머지 상은 J² = -Id 로 채움)
                      또는 16개 유리수 (행 우선)
4) 파라미터         : lam=3/5,gamma=1
5) 가우스 유리수 목록 : 0, 1, -1, i, -i, 1/2+1/2*i
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains import QQ

from lieinv.errors import (
    AlgebraParseError,
    DimensionMismatchError,
    FormParseError,
    NotAlmostComplexError,
)
from lieinv.forms import KForm
from lieinv.lie import LieAlgebra, jacobi_defect
from lieinv.linalg import equal, identity, matrix, to_gaussian, to_scalar

log = logging.getLogger("lieinv.parsing")

MAX_DIM = 9

_DIM_RE = re.compile(r"^dim\s+(\d+)$")
_BRACKET_RE = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.+)$")
_TERM_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)\s*\*\s*(\d+)$")
_RATIONAL = r"\d+(?:/\d+)?"
_FORM_TERM_RE = re.compile(rf"([+-]*)(?:({_RATIONAL})\*)?e(\d+)")
_MAP_RE = re.compile(r"^e(\d)\s*->\s*(.+)$")


# ---------- Lie 대수 파일 ----------

def parse_algebra_text(text: str, name: str = "user") -> LieAlgebra:
    dim: Optional[int] = None
    brackets: Dict[Tuple[int, int], Dict[int, object]] = {}
    seen: Dict[Tuple[int, int], int] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        m = _DIM_RE.match(line)
        if m:
            if dim is not None:
                raise AlgebraParseError("dim given twice", line_no)
            dim = int(m.group(1))
            if not 1 <= dim <= MAX_DIM:
                raise AlgebraParseError(f"dim must be between 1 and {MAX_DIM}", line_no)
            continue

        m = _BRACKET_RE.match(line)
        if not m:
            raise AlgebraParseError(f"cannot read {line!r}", line_no)
        if dim is None:
            raise AlgebraParseError("bracket before the 'dim' line", line_no)
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise AlgebraParseError(f"index outside 1..{dim} in [{i},{j}]", line_no)
        if i == j:
            raise AlgebraParseError(f"[{i},{i}] is always zero", line_no)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise AlgebraParseError(
                f"duplicate bracket [{i},{j}] (already given on line {seen[key]})", line_no
            )
        seen[key] = line_no

        images: Dict[int, object] = {}
        rhs = m.group(3).strip()
        if rhs != "0":
            for term in rhs.split(","):
                tm = _TERM_RE.match(term.strip())
                if not tm:
                    raise AlgebraParseError(f"cannot read term {term.strip()!r}", line_no)
                k = int(tm.group(2))
                if not 1 <= k <= dim:
                    raise AlgebraParseError(f"basis index e{k} outside 1..{dim}", line_no)
                try:
                    images[k] = to_scalar(images.get(k, 0)) + to_scalar(tm.group(1))
                except ValueError as e:
                    raise AlgebraParseError(str(e), line_no) from e
        brackets[(i, j)] = images

    if dim is None:
        raise AlgebraParseError("missing 'dim' line")
    return LieAlgebra.from_brackets(dim, brackets, name=name)


def ingest(path) -> LieAlgebra:
    """파일을 읽어 LieAlgebra 로. Jacobi 결함은 여기서 먼저 로그로 남긴다."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraParseError(f"cannot read {path}: {e.strerror}") from e
    g = parse_algebra_text(text, name=path.stem)
    defects = jacobi_defect(g)
    if defects:
        log.warning("%s: Jacobi identity fails on %d triple(s), first (e%d, e%d, e%d)",
                    g.name, len(defects), *defects[0][:3])
    else:
        log.info("%s 로드됨: %s", g.name, g.describe())
    return g


# ---------- 형식 리터럴 ----------

def _coefficient(text: Optional[str]):
    try:
        return to_scalar(text or 1)
    except ValueError as e:
        raise FormParseError(str(e)) from e


def parse_form(text: str, dim: int, degree: Optional[int] = None) -> KForm:
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "0"):
        if degree is None:
            raise FormParseError("the zero form needs an explicit degree")
        return KForm.zero(degree, dim)

    pieces: List[Tuple[Tuple[int, ...], object]] = []
    pos = 0
    found_degree = degree
    for m in _FORM_TERM_RE.finditer(compact):
        if m.start() != pos or (pos and not m.group(1)):
            raise FormParseError(f"cannot read form literal near {compact[pos:]!r}")
        pos = m.end()
        signs, coeff, digits = m.group(1), m.group(2), m.group(3)
        value = _coefficient(coeff)
        if signs.count("-") % 2:
            value = -value
        idx = tuple(int(c) - 1 for c in digits)
        if any(i < 0 or i >= dim for i in idx):
            raise FormParseError(f"e{digits} outside dimension {dim}")
        if found_degree is None:
            found_degree = len(idx)
        elif len(idx) != found_degree:
            raise FormParseError(f"mixed degrees in form literal {text!r}")
        pieces.append((idx, value))
    if pos != len(compact):
        raise FormParseError(f"cannot read form literal near {compact[pos:]!r}")
    total = KForm.zero(found_degree, dim)
    try:
        for idx, value in pieces:
            total = total + KForm.from_dict(found_degree, dim, {idx: value})
    except DimensionMismatchError as e:
        raise FormParseError(str(e)) from e
    return total


# ---------- 벡터 / J 리터럴 ----------

def parse_vector(text: str, dim: int) -> list:
    """'-2*e1', 'e2+1/2*e3' → 실계수 벡터"""
    compact = re.sub(r"\s+", "", text)
    out = [QQ.zero] * dim
    pos = 0
    for m in _FORM_TERM_RE.finditer(compact):
        if m.start() != pos or (pos and not m.group(1)):
            raise FormParseError(f"cannot read vector near {compact[pos:]!r}")
        pos = m.end()
        digits = m.group(3)
        if len(digits) != 1:
            raise FormParseError(f"vector term e{digits} must use a single index")
        i = int(digits) - 1
        if not 0 <= i < dim:
            raise FormParseError(f"e{digits} outside dimension {dim}")
        value = _coefficient(m.group(2))
        if m.group(1).count("-") % 2:
            value = -value
        out[i] += value
    if pos != len(compact) or not compact:
        raise FormParseError(f"cannot read vector {text!r}")
    return out


def parse_j(text: str, dim: int = 4):
    """
    'J: e1->e2, e3->e4' 또는 16개 유리수(행 우선) → 실행렬 J.
    J e_a = c e_b 꼴이면 J e_b = -(1/c) e_a 로 채운다. J² = -Id 가 아니면 오류.
    """
    body = text.strip()
    if body.lower().startswith("j:"):
        body = body[2:].strip()

    if "->" not in body:
        parts = [p for p in re.split(r"[,\s]+", body) if p]
        if len(parts) != dim * dim:
            raise FormParseError(f"expected {dim * dim} matrix entries, got {len(parts)}")
        try:
            rows = [[to_scalar(parts[r * dim + c]) for c in range(dim)] for r in range(dim)]
        except ValueError as e:
            raise FormParseError(str(e)) from e
        J = matrix(rows)
    else:
        images: Dict[int, list] = {}
        for item in body.split(","):
            m = _MAP_RE.match(item.strip())
            if not m:
                raise FormParseError(f"cannot read J image {item.strip()!r}")
            a = int(m.group(1)) - 1
            if not 0 <= a < dim:
                raise FormParseError(f"e{a + 1} outside dimension {dim}")
            if a in images:
                raise FormParseError(f"J e{a + 1} given twice")
            images[a] = parse_vector(m.group(2), dim)
        for a, v in list(images.items()):
            support = [i for i, x in enumerate(v) if x]
            if len(support) == 1:
                b = support[0]
                completed = [QQ.zero] * dim
                completed[a] = -QQ.one / v[b]
                if b in images and images[b] != completed:
                    continue
                images[b] = completed
        missing = [i + 1 for i in range(dim) if i not in images]
        if missing:
            raise FormParseError(f"J images missing for e{', e'.join(map(str, missing))}")
        J = matrix([[images[c][r] for c in range(dim)] for r in range(dim)])

    square = J * J
    if not equal(square, -identity(dim)):
        raise NotAlmostComplexError("J*J is not -Id")
    return J


# ---------- 파라미터 / 가우스 목록 ----------

def parse_params(text: Optional[str]) -> Dict[str, object]:
    out: Dict[str, object] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise FormParseError(f"parameter {item!r} is not of the form name=value")
        key, value = (s.strip() for s in item.split("=", 1))
        try:
            out[key] = to_scalar(value)
        except ValueError as e:
            raise FormParseError(f"parameter {key}: {e}") from e
    return out


def parse_gaussian_list(text: str) -> List:
    values = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            values.append(to_gaussian(item))
        except ValueError as e:
            raise FormParseError(f"cannot read Gaussian rational {item!r}") from e
    return values
