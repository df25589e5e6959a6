# lieinv/cohomology.py

"""
Chevalley–Eilenberg 코호몰로지 H^k(g) (ℚ 위에서 계산, ℝ 와 차원이 같다)

- complex_of  : d_k : Λ^k → Λ^{k+1} 행렬들 (사전식 기저, 열 = d(기저 형식))
- cohomology  : Betti 수 + 대표 cocycle
- is_exact    : dη = w 인 원시형식 η, 없으면 류(class) 좌표
행렬은 두 경로(pointwise / leibniz)로 만들 수 있고, 표 검증에서는 둘을 비교한다.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from lieinv.errors import DimensionMismatchError, FormNotClosedError, JacobiError
from lieinv.forms import KForm, basis_tuples, ce_differential, ce_differential_leibniz
from lieinv.lie import LieAlgebra, derived_subalgebra, is_unimodular, require_lie
from lieinv.linalg import coordinates, in_span, is_zero_matrix, nullspace, rank, solve, span_rank

log = logging.getLogger("lieinv.cohomology")

PATHS = {
    "pointwise": ce_differential,
    "leibniz": ce_differential_leibniz,
}


# ---------- 복합체 ----------

@dataclass(frozen=True)
class CochainComplex:
    algebra: LieAlgebra
    matrices: Tuple[DomainMatrix, ...]   # matrices[k] : Λ^k → Λ^{k+1}, k = 0..n
    path: str = "pointwise"

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def d(self, k: int) -> DomainMatrix:
        """k 가 범위 밖이면 0 행렬 (Λ^{-1} = Λ^{n+1} = 0)"""
        n = self.dim
        if 0 <= k <= n:
            return self.matrices[k]
        return DomainMatrix.zeros((comb(n, k + 1) if 0 <= k + 1 <= n else 0,
                                   comb(n, k) if 0 <= k <= n else 0), QQ)

    def rank(self, k: int) -> int:
        return rank(self.d(k))


def _columns_to_matrix(columns: List[list], rows: int) -> DomainMatrix:
    cols = len(columns)
    if rows == 0 or cols == 0:
        return DomainMatrix.zeros((rows, cols), QQ)
    return DomainMatrix([[col[i] for col in columns] for i in range(rows)], (rows, cols), QQ)


def differential_matrix(g: LieAlgebra, k: int, path: str = "pointwise") -> DomainMatrix:
    diff = PATHS[path]
    n = g.dim
    columns = [diff(g, KForm.from_dict(k, n, {idx: QQ.one})).vector() for idx in basis_tuples(n, k)]
    return _columns_to_matrix(columns, comb(n, k + 1) if k + 1 <= n else 0)


def complex_of(g: LieAlgebra, path: str = "pointwise") -> CochainComplex:
    if path not in PATHS:
        raise ValueError(f"unknown differential path {path!r} (use one of {', '.join(PATHS)})")
    require_lie(g)
    matrices = tuple(differential_matrix(g, k, path) for k in range(g.dim + 1))
    for k in range(g.dim - 1):
        a, b = matrices[k], matrices[k + 1]
        if 0 in a.shape or 0 in b.shape:
            continue
        if not is_zero_matrix(b * a):
            raise JacobiError(f"{g.name}: d∘d ≠ 0 on Λ^{k}")
    log.debug("%s: complex built (%s), ranks %s", g.name, path, [rank(m) for m in matrices])
    return CochainComplex(g, matrices, path)


# ---------- 코호몰로지 ----------

@dataclass(frozen=True)
class DegreeCohomology:
    degree: int
    kernel_dim: int
    image_dim: int
    representatives: Tuple[KForm, ...]

    @property
    def betti(self) -> int:
        return self.kernel_dim - self.image_dim


@dataclass(frozen=True)
class CohomologyReport:
    algebra: str
    dim: int
    path: str
    degrees: Tuple[DegreeCohomology, ...]
    unimodular: bool

    @property
    def betti(self) -> Tuple[int, ...]:
        return tuple(d.betti for d in self.degrees)

    def representatives(self, k: int) -> Tuple[KForm, ...]:
        return self.degrees[k].representatives

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def image_basis(cx: CochainComplex, k: int) -> List[list]:
    """im(d_{k-1}) ⊂ Λ^k 의 기저 (열공간을 행 기저로)"""
    if k == 0:
        return []
    M = cx.d(k - 1)
    if 0 in M.shape:
        return []
    columns = [list(c) for c in M.transpose().to_list()]
    nonzero = [c for c in columns if any(c)]
    basis: List[list] = []
    for c in nonzero:
        if not basis or not in_span(basis, c):
            basis.append(c)
    return basis


def kernel_basis(cx: CochainComplex, k: int) -> List[list]:
    n = cx.dim
    M = cx.d(k)
    if M.shape[0] == 0:
        return [KForm.from_dict(k, n, {idx: QQ.one}).vector() for idx in basis_tuples(n, k)]
    return nullspace(M)


def _choose_representatives(cx: CochainComplex, k: int, count: int) -> List[list]:
    """닫힌 단항식(사전식) 먼저, 그다음 커널 기저 벡터 순서로 im d 를 넓혀 간다."""
    n = cx.dim
    image = image_basis(cx, k)
    M = cx.d(k)
    columns = M.transpose().to_list() if M.shape[0] else [[] for _ in basis_tuples(n, k)]
    candidates = []
    for j, idx in enumerate(basis_tuples(n, k)):
        if not any(columns[j]):
            candidates.append(KForm.from_dict(k, n, {idx: QQ.one}).vector())
    candidates.extend(kernel_basis(cx, k))

    chosen: List[list] = []
    for v in candidates:
        if len(chosen) == count:
            break
        current = image + chosen
        if not any(v) or (current and in_span(current, v)):
            continue
        chosen.append(v)
    return chosen


def cohomology(g: LieAlgebra, path: str = "pointwise", cx: Optional[CochainComplex] = None) -> CohomologyReport:
    cx = cx or complex_of(g, path)
    n = g.dim
    degrees = []
    for k in range(n + 1):
        kernel_dim = comb(n, k) - cx.rank(k)
        image_dim = cx.rank(k - 1) if k > 0 else 0
        reps = _choose_representatives(cx, k, kernel_dim - image_dim)
        degrees.append(
            DegreeCohomology(
                degree=k,
                kernel_dim=kernel_dim,
                image_dim=image_dim,
                representatives=tuple(KForm.from_vector(k, n, v) for v in reps),
            )
        )
    report = CohomologyReport(g.name, n, cx.path, tuple(degrees), is_unimodular(g))
    log.info("%s: betti %s (%s)", g.name, report.betti, cx.path)
    return report


def compare_paths(g: LieAlgebra) -> Tuple[CohomologyReport, CohomologyReport, bool]:
    """행렬을 두 경로로 만들고 Betti 수와 행렬 자체가 같은지 본다."""
    a_cx, b_cx = complex_of(g, "pointwise"), complex_of(g, "leibniz")
    a, b = cohomology(g, cx=a_cx), cohomology(g, cx=b_cx)
    same = a.betti == b.betti and all(
        x.to_list() == y.to_list() for x, y in zip(a_cx.matrices, b_cx.matrices)
    )
    if not same:
        log.warning("%s: differential paths disagree (%s vs %s)", g.name, a.betti, b.betti)
    return a, b, same


def b1_from_derived(g: LieAlgebra) -> int:
    """b₁ = dim(g/g′)"""
    return g.dim - len(derived_subalgebra(g))


# ---------- 완전성 ----------

@dataclass(frozen=True)
class ExactnessResult:
    exact: bool
    primitive: Optional[KForm]
    class_coordinates: Tuple[object, ...] = ()


def is_exact(g: LieAlgebra, w: KForm, cx: Optional[CochainComplex] = None) -> ExactnessResult:
    if w.dim != g.dim:
        raise DimensionMismatchError(f"form on dimension {w.dim} for algebra of dimension {g.dim}")
    cx = cx or complex_of(g)
    k = w.degree
    if not ce_differential(g, w).is_zero():
        raise FormNotClosedError(f"{w} is not closed on {g.name}")
    if w.is_zero():
        return ExactnessResult(True, KForm.zero(k - 1, g.dim) if k > 0 else None)

    if k > 0:
        M = cx.d(k - 1)
        x = solve(M, w.vector()) if 0 not in M.shape else None
        if x is not None:
            return ExactnessResult(True, KForm.from_vector(k - 1, g.dim, x))

    image = image_basis(cx, k)
    report = cohomology(g, cx=cx)
    reps = [r.vector() for r in report.representatives(k)]
    coords = coordinates(image + reps, w.vector()) or []
    return ExactnessResult(False, None, tuple(coords[len(image):]))


# ---------- 표 대표원 확인 ----------

@dataclass(frozen=True)
class RepresentativeCheck:
    degree: int
    closed: Tuple[bool, ...]
    independent: bool
    spans: bool

    @property
    def ok(self) -> bool:
        return all(self.closed) and self.independent and self.spans


def check_representatives(cx: CochainComplex, k: int, forms: Sequence[KForm]) -> RepresentativeCheck:
    """
    forms 가 H^k 의 기저인지: 모두 닫혀 있고, im d 를 법으로 독립이고,
    개수가 Betti 수와 같다.
    """
    g = cx.algebra
    closed = tuple(ce_differential(g, f).is_zero() for f in forms)
    image = image_basis(cx, k)
    vectors = [f.vector() for f in forms]
    total = span_rank(image + vectors) if (image or vectors) else 0
    independent = total == len(image) + len(vectors)
    betti = comb(g.dim, k) - cx.rank(k) - (cx.rank(k - 1) if k > 0 else 0)
    return RepresentativeCheck(k, closed, independent, independent and len(vectors) == betti)


def summarize(report: CohomologyReport) -> Dict[str, object]:
    return {
        "betti": list(report.betti),
        "representatives": {d.degree: [str(r) for r in d.representatives] for d in report.degrees},
        "euler": report.euler_characteristic(),
        "unimodular": report.unimodular,
    }
