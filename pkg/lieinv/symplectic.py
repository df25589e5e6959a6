# lieinv/symplectic.py

"""
좌불변 심플렉틱 구조 (4차원)

ω 가 닫혀 있고 ω∧ω ≠ 0 이면 심플렉틱. ω∧ω = 2·Pf(ω)·e1234.
닫힌 2-형식 family 위에서 Pf 는 좌표의 이차형식이고,
존재 여부는 그 이차형식이 0 인지로 정확하게 결정한다 (샘플링 없음).
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import sympy

from lieinv.cohomology import CochainComplex, complex_of, image_basis
from lieinv.errors import DimensionMismatchError
from lieinv.forms import KForm, gram_matrix, wedge
from lieinv.lie import LieAlgebra
from lieinv.linalg import determinant, nullspace, same_span
from lieinv.symbolic import to_sympy

log = logging.getLogger("lieinv.symplectic")


def pfaffian(w: KForm):
    """Pf = a12 a34 - a13 a24 + a14 a23"""
    if w.degree != 2 or w.dim != 4:
        raise DimensionMismatchError(f"pfaffian needs a 2-form on dimension 4 (got {w.degree}-form on {w.dim})")
    a = w.coefficient
    return a(1, 2) * a(3, 4) - a(1, 3) * a(2, 4) + a(1, 4) * a(2, 3)


def pfaffian_by_wedge(w: KForm):
    """ω∧ω = 2 Pf e1234 에서 읽은 값 (검산용)"""
    return wedge(w, w).coefficient(1, 2, 3, 4) / 2


def is_nondegenerate(w: KForm) -> bool:
    return bool(pfaffian(w))


def gram_nondegenerate(w: KForm) -> bool:
    """반대칭 Gram 행렬이 가역인지 (det = Pf²)"""
    return bool(determinant(gram_matrix(w)))


def _polar(u: KForm, v: KForm):
    """Pf 의 대칭 쌍선형형식 B(u, v), B(w, w) = Pf(w)"""
    return (pfaffian(u + v) - pfaffian(u) - pfaffian(v)) / 2


# ---------- family ----------

@dataclass(frozen=True)
class ClosedTwoFormFamily:
    basis: Tuple[KForm, ...]
    gram: Tuple[Tuple[object, ...], ...]     # B(b_i, b_j)
    coordinate_prefix: str = "t"

    @classmethod
    def of(cls, basis: Sequence[KForm], prefix: str = "t") -> "ClosedTwoFormFamily":
        basis = tuple(basis)
        gram = tuple(tuple(_polar(u, v) for v in basis) for u in basis)
        return cls(basis, gram, prefix)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self) -> Tuple[sympy.Symbol, ...]:
        return tuple(sympy.Symbol(f"{self.coordinate_prefix}{i + 1}") for i in range(self.dimension))

    @property
    def pfaffian_poly(self):
        """family 좌표 t1..tm 의 이차식"""
        t = self.coordinates()
        expr = sympy.Integer(0)
        for i in range(self.dimension):
            for j in range(self.dimension):
                c = self.gram[i][j]
                if c:
                    expr += to_sympy(c) * t[i] * t[j]
        return sympy.expand(expr)

    def pfaffian_is_zero(self) -> bool:
        """이차형식이 항등적으로 0 (모든 계수가 0)"""
        return not any(c for row in self.gram for c in row)

    def assemble(self, coords: Sequence) -> KForm:
        total = KForm.zero(2, self.basis[0].dim if self.basis else 4)
        for c, b in zip(coords, self.basis):
            if c:
                total = total + b.scale(c)
        return total

    def vectors(self) -> List[list]:
        return [b.vector() for b in self.basis]

    def same_span_as(self, vectors: Sequence[Sequence]) -> bool:
        mine = self.vectors()
        vectors = [list(v) for v in vectors if any(v)]
        if not mine or not vectors:
            return not mine and not vectors
        return same_span(mine, vectors)

    def witness(self) -> Optional[KForm]:
        """b_i 중 Pf ≠ 0 인 첫 번째, 없으면 b_i + b_j (i<j) 순서"""
        for i, b in enumerate(self.basis):
            if self.gram[i][i]:
                return b
        for i, j in combinations(range(self.dimension), 2):
            if self.gram[i][i] + self.gram[j][j] + 2 * self.gram[i][j]:
                return self.basis[i] + self.basis[j]
        return None


def closed_two_forms(g: LieAlgebra, cx: Optional[CochainComplex] = None) -> ClosedTwoFormFamily:
    cx = cx or complex_of(g)
    n = g.dim
    M = cx.d(2)
    vectors = nullspace(M) if M.shape[0] else [KForm.basis(n, *[i + 1 for i in idx]).vector()
                                                for idx in combinations(range(n), 2)]
    family = ClosedTwoFormFamily.of([KForm.from_vector(2, n, v) for v in vectors])
    log.debug("%s: closed 2-forms dim %d", g.name, family.dimension)
    return family


@dataclass(frozen=True)
class SymplecticDecision:
    exists: bool
    family: ClosedTwoFormFamily
    witness: Optional[KForm] = None

    @property
    def certificate(self) -> str:
        if self.exists:
            return f"Pf({self.witness}) = {pfaffian(self.witness)}"
        return "Pf restricted to the family is the zero quadratic form"


def _decide(family: ClosedTwoFormFamily) -> SymplecticDecision:
    if family.pfaffian_is_zero():
        return SymplecticDecision(False, family)
    w = family.witness()
    return SymplecticDecision(w is not None, family, w)


def symplectic_exists(g: LieAlgebra, cx: Optional[CochainComplex] = None) -> SymplecticDecision:
    if g.dim != 4:
        raise DimensionMismatchError("symplectic_exists is implemented for dimension 4")
    decision = _decide(closed_two_forms(g, cx))
    log.info("%s: symplectic %s", g.name, "YES" if decision.exists else "NO")
    return decision


def exact_two_forms(g: LieAlgebra, cx: Optional[CochainComplex] = None) -> ClosedTwoFormFamily:
    """im(d: Λ¹ → Λ²)"""
    cx = cx or complex_of(g)
    return ClosedTwoFormFamily.of([KForm.from_vector(2, g.dim, v) for v in image_basis(cx, 2)], prefix="s")


def exact_symplectic_family(g: LieAlgebra, cx: Optional[CochainComplex] = None) -> SymplecticDecision:
    if g.dim != 4:
        raise DimensionMismatchError("exact_symplectic_family is implemented for dimension 4")
    return _decide(exact_two_forms(g, cx))


# ---------- 표와 비교할 때 쓰는 도구 ----------

def pfaffian_in_coordinates(vectors: Sequence[Sequence], names: Sequence[str], dim: int = 4):
    """Σ x_k v_k 의 Pf 를 주어진 이름의 좌표 다항식으로"""
    forms = [KForm.from_vector(2, dim, v) for v in vectors]
    fam = ClosedTwoFormFamily.of(forms)
    xs = [sympy.Symbol(n) for n in names]
    return sympy.expand(fam.pfaffian_poly.subs(dict(zip(fam.coordinates(), xs)), simultaneous=True))

