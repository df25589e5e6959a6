# lieinv/forms.py

"""
좌불변 k-형식과 Chevalley–Eilenberg 미분

- KForm : 정렬된 인덱스 튜플(0-based) → QQ 계수
- 표기   : e12 = e^1∧e^2 (출력은 1-based)
- d 는 두 가지 방법으로 계산한다.
    ce_differential          : (dw)(Y0..Yk) = Σ_{a<b} (-1)^{a+b} w([Ya,Yb], ...) 를 기저에서 직접 평가
    ce_differential_leibniz  : de^k = -Σ_{i<j} c^k_ij e^i∧e^j 에서 반미분(Leibniz) 규칙으로 전개
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from lieinv.errors import DimensionMismatchError
from lieinv.lie import LieAlgebra, bracket
from lieinv.linalg import format_scalar, mat_vec, to_scalar, unit_vector

log = logging.getLogger("lieinv.forms")

Index = Tuple[int, ...]


@lru_cache(maxsize=None)
def basis_tuples(n: int, k: int) -> Tuple[Index, ...]:
    """Λ^k 의 사전식 기저 (0-based 튜플)"""
    if k < 0 or k > n:
        return ()
    return tuple(combinations(range(n), k))


def _sort_with_sign(indices: Sequence[int]) -> Tuple[int, Index]:
    """인덱스를 정렬하고 치환 부호를 돌려준다. 중복이면 부호 0."""
    if len(set(indices)) != len(indices):
        return 0, ()
    items = list(indices)
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


def _perm_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a, b in combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class KForm:
    degree: int
    dim: int
    terms: Tuple[Tuple[Index, object], ...] = ()

    # ---------- 생성 ----------

    @classmethod
    def from_dict(cls, degree: int, dim: int, coeffs: Mapping[Index, object]) -> "KForm":
        acc: Dict[Index, object] = {}
        for idx, c in coeffs.items():
            if len(idx) != degree:
                raise DimensionMismatchError(f"index {idx} does not have degree {degree}")
            if any(i < 0 or i >= dim for i in idx):
                raise DimensionMismatchError(f"index {idx} outside dimension {dim}")
            sign, key = _sort_with_sign(idx)
            if not sign:
                continue
            value = to_scalar(c) * sign
            acc[key] = acc.get(key, QQ.zero) + value
        terms = tuple(sorted((k, v) for k, v in acc.items() if v))
        return cls(degree, dim, terms)

    @classmethod
    def zero(cls, degree: int, dim: int) -> "KForm":
        return cls(degree, dim, ())

    @classmethod
    def basis(cls, dim: int, *indices: int) -> "KForm":
        """KForm.basis(4, 1, 3) = e^1∧e^3 (1-based 인자)"""
        return cls.from_dict(len(indices), dim, {tuple(i - 1 for i in indices): QQ.one})

    @classmethod
    def from_vector(cls, degree: int, dim: int, vector: Sequence) -> "KForm":
        return cls.from_dict(degree, dim, dict(zip(basis_tuples(dim, degree), vector)))

    @classmethod
    def volume(cls, dim: int) -> "KForm":
        return cls.basis(dim, *range(1, dim + 1))

    # ---------- 조회 ----------

    def coefficients(self) -> Dict[Index, object]:
        return dict(self.terms)

    def coefficient(self, *indices: int):
        """1-based 인덱스의 계수 (정렬 부호 반영)"""
        sign, key = _sort_with_sign([i - 1 for i in indices])
        if not sign:
            return QQ.zero
        return self.coefficients().get(key, QQ.zero) * sign

    def vector(self) -> List:
        coeffs = self.coefficients()
        return [coeffs.get(idx, QQ.zero) for idx in basis_tuples(self.dim, self.degree)]

    def is_zero(self) -> bool:
        return not self.terms

    # ---------- 선형 연산 ----------

    def _check_same(self, other: "KForm") -> None:
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise DimensionMismatchError(
                f"forms of degree/dim {self.degree}/{self.dim} and {other.degree}/{other.dim}"
            )

    def __add__(self, other: "KForm") -> "KForm":
        self._check_same(other)
        acc = self.coefficients()
        for idx, c in other.terms:
            acc[idx] = acc.get(idx, QQ.zero) + c
        return KForm.from_dict(self.degree, self.dim, acc)

    def __neg__(self) -> "KForm":
        return self.scale(-1)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def scale(self, c) -> "KForm":
        c = to_scalar(c)
        return KForm.from_dict(self.degree, self.dim, {idx: v * c for idx, v in self.terms})

    def __rmul__(self, c) -> "KForm":
        return self.scale(c)

    def __str__(self) -> str:
        return format_form(self)


def format_form(w: KForm) -> str:
    """`1*e12 + -3/2*e134` 형식 (파서와 같은 문법). 0-형식은 상수 그대로."""
    if w.is_zero():
        return "0"
    if w.degree == 0:
        return format_scalar(w.terms[0][1])
    return " + ".join(f"{format_scalar(c)}*e{''.join(str(i + 1) for i in idx)}" for idx, c in w.terms)


def wedge(a: KForm, b: KForm) -> KForm:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"wedge of forms on dimensions {a.dim} and {b.dim}")
    degree = a.degree + b.degree
    if degree > a.dim:
        return KForm.zero(degree, a.dim)
    acc: Dict[Index, object] = {}
    for ia, ca in a.terms:
        for ib, cb in b.terms:
            sign, key = _sort_with_sign(ia + ib)
            if sign:
                acc[key] = acc.get(key, QQ.zero) + ca * cb * sign
    return KForm.from_dict(degree, a.dim, acc)


def evaluate(w: KForm, *vectors: Sequence):
    """w(X1, ..., Xk) = Σ_I a_I det[e^{i_r}(X_s)]"""
    if len(vectors) != w.degree:
        raise DimensionMismatchError(f"{w.degree}-form evaluated on {len(vectors)} vectors")
    for v in vectors:
        if len(v) != w.dim:
            raise DimensionMismatchError(f"vector of length {len(v)} for dimension {w.dim}")
    total = QQ.zero
    k = w.degree
    perms = [(p, _perm_sign(p)) for p in permutations(range(k))]
    for idx, c in w.terms:
        det = QQ.zero
        for p, s in perms:
            prod = QQ.one
            for r in range(k):
                x = vectors[p[r]][idx[r]]
                if not x:
                    prod = QQ.zero
                    break
                prod *= x
            if prod:
                det += prod if s > 0 else -prod
        total += c * det
    return total


def gram_matrix(w: KForm) -> DomainMatrix:
    """2-형식의 반대칭 행렬 ω(e_i, e_j)"""
    if w.degree != 2:
        raise DimensionMismatchError("gram_matrix needs a 2-form")
    n = w.dim
    rows = [[QQ.zero] * n for _ in range(n)]
    for (i, j), c in w.terms:
        rows[i][j] = c
        rows[j][i] = -c
    return DomainMatrix(rows, (n, n), QQ)


def pullback(w: KForm, x: DomainMatrix) -> KForm:
    """(x^*w)(X1..Xk) = w(xX1, ..., xXk)"""
    n = w.dim
    images = [mat_vec(x, unit_vector(n, i)) for i in range(n)]
    coeffs = {}
    for idx in basis_tuples(n, w.degree):
        value = evaluate(w, *(images[i] for i in idx))
        if value:
            coeffs[idx] = value
    return KForm.from_dict(w.degree, n, coeffs)


# ---------- Chevalley–Eilenberg 미분 ----------

def _check_dim(g: LieAlgebra, w: KForm) -> None:
    if g.dim != w.dim:
        raise DimensionMismatchError(f"form on dimension {w.dim} for algebra of dimension {g.dim}")


def ce_differential(g: LieAlgebra, w: KForm) -> KForm:
    """(dw)(Y0..Yk) = Σ_{a<b} (-1)^{a+b} w([Ya,Yb], Y0, ..^a..^b.., Yk) 를 기저 튜플마다 평가"""
    _check_dim(g, w)
    n, k = g.dim, w.degree
    if k + 1 > n:
        return KForm.zero(k + 1, n)
    basis = [unit_vector(n, i) for i in range(n)]
    coeffs = {}
    for idx in basis_tuples(n, k + 1):
        value = QQ.zero
        for a, b in combinations(range(k + 1), 2):
            br = bracket(g, basis[idx[a]], basis[idx[b]])
            if not any(br):
                continue
            rest = [basis[idx[t]] for t in range(k + 1) if t not in (a, b)]
            term = evaluate(w, br, *rest)
            if term:
                value += term if (a + b) % 2 == 0 else -term
        if value:
            coeffs[idx] = value
    return KForm.from_dict(k + 1, n, coeffs)


def one_form_differentials(g: LieAlgebra) -> List[KForm]:
    """de^k = -Σ_{i<j} c^k_{ij} e^i∧e^j"""
    n = g.dim
    out = []
    for k in range(n):
        coeffs = {(i, j): -g.constant(k, i, j) for i, j in combinations(range(n), 2) if g.constant(k, i, j)}
        out.append(KForm.from_dict(2, n, coeffs))
    return out


def ce_differential_leibniz(g: LieAlgebra, w: KForm) -> KForm:
    """d(e^{i1}∧...∧e^{ik}) = Σ_r (-1)^r e^{i1}∧..∧de^{ir}∧..∧e^{ik}"""
    _check_dim(g, w)
    n, k = g.dim, w.degree
    if k + 1 > n:
        return KForm.zero(k + 1, n)
    de = one_form_differentials(g)
    total = KForm.zero(k + 1, n)
    for idx, c in w.terms:
        for r, i in enumerate(idx):
            left = _monomial(n, idx[:r])
            right = _monomial(n, idx[r + 1:])
            piece = wedge(wedge(left, de[i]), right)
            if r % 2:
                piece = -piece
            total = total + piece.scale(c)
    return total


def _monomial(n: int, idx: Iterable[int]) -> KForm:
    idx = tuple(idx)
    return KForm.from_dict(len(idx), n, {idx: QQ.one})


def is_closed(g: LieAlgebra, w: KForm) -> bool:
    return ce_differential(g, w).is_zero()
