# lieinv/kahler.py

"""
Kähler 쌍 (J, ω)

- compatible_family : 닫혀 있고 ω(J·,J·) = ω 인 2-형식 전체
- kahler_exists     : 그 family 위에서 Pf 가 0 이 아닌지 (정확 판정)
- metric_from       : φ(X, Y) = ω(X, JY) 와 부호수
- compatibility_transport_check : 자기동형 x 로 J₁ 을 옮겼을 때 호환성이 따라가는지
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from lieinv.cohomology import CochainComplex, complex_of
from lieinv.complex_structures import AlmostComplexStructure, is_integrable
from lieinv.errors import (
    AsymmetricMetricError,
    DimensionMismatchError,
    NotAutomorphismError,
    ParameterOutOfRangeError,
)
from lieinv.forms import KForm, basis_tuples, evaluate, is_closed, pullback
from lieinv.lie import LieAlgebra, is_automorphism
from lieinv.linalg import (
    congruence_diagonalize,
    equal,
    inertia,
    inverse,
    matrix,
    nullspace,
    to_scalar,
    unit_vector,
)
from lieinv.symplectic import ClosedTwoFormFamily, pfaffian

log = logging.getLogger("lieinv.kahler")


class KahlerStatus(str, Enum):
    KAHLER = "KAHLER"
    ALMOST_KAHLER = "ALMOST_KAHLER"
    NONE = "NONE"


# ---------- 호환 family ----------

@dataclass(frozen=True)
class CompatibleFamily:
    J: AlmostComplexStructure
    family: ClosedTwoFormFamily
    integrable: bool

    @property
    def basis(self) -> Tuple[KForm, ...]:
        return self.family.basis

    @property
    def pfaffian_poly(self):
        return self.family.pfaffian_poly

    @property
    def dimension(self) -> int:
        return self.family.dimension


def is_compatible(w: KForm, J: AlmostComplexStructure) -> bool:
    n = w.dim
    for i, j in combinations(range(n), 2):
        if evaluate(w, J.image(i), J.image(j)) != evaluate(w, unit_vector(n, i), unit_vector(n, j)):
            return False
    return True


def _compatibility_rows(J: AlmostComplexStructure) -> List[list]:
    """i<j 마다 한 행: 열 = 기저 2-형식 b 에 대한 b(Je_i, Je_j) - b(e_i, e_j)"""
    n = J.dim
    basis = [KForm.from_dict(2, n, {idx: QQ.one}) for idx in basis_tuples(n, 2)]
    rows = []
    for i, j in combinations(range(n), 2):
        Ji, Jj = J.image(i), J.image(j)
        ei, ej = unit_vector(n, i), unit_vector(n, j)
        rows.append([evaluate(b, Ji, Jj) - evaluate(b, ei, ej) for b in basis])
    return rows


def compatible_family(g: LieAlgebra, J: AlmostComplexStructure,
                      cx: Optional[CochainComplex] = None) -> CompatibleFamily:
    if J.dim != g.dim:
        raise DimensionMismatchError(f"J of size {J.dim} on algebra of dimension {g.dim}")
    cx = cx or complex_of(g)
    n = g.dim
    rows = [list(r) for r in cx.d(2).to_list()] + _compatibility_rows(J)
    vectors = nullspace(matrix(rows, QQ))
    family = ClosedTwoFormFamily.of([KForm.from_vector(2, n, v) for v in vectors], prefix="c")
    integrable = is_integrable(g, J)
    log.debug("%s: compatible family dim %d for J = %s", g.name, family.dimension, J.describe())
    return CompatibleFamily(J, family, integrable)


# ---------- 계량 ----------

@dataclass(frozen=True)
class PseudoMetric:
    phi: DomainMatrix
    signature: Tuple[int, int, int]

    def value(self, i: int, j: int):
        return self.phi.to_list()[i][j]


def metric_from(w: KForm, J: AlmostComplexStructure) -> PseudoMetric:
    """φ_ij = ω(e_i, Je_j)"""
    n = w.dim
    rows = [[evaluate(w, unit_vector(n, i), J.image(j)) for j in range(n)] for i in range(n)]
    for i, j in combinations(range(n), 2):
        if rows[i][j] != rows[j][i]:
            raise AsymmetricMetricError(
                f"ω(e{i + 1}, Je{j + 1}) ≠ ω(e{j + 1}, Je{i + 1}): ω is not compatible with J"
            )
    phi = matrix(rows, QQ)
    diagonal, _ = congruence_diagonalize(phi)
    return PseudoMetric(phi, inertia(diagonal))


def metric_is_j_invariant(metric: PseudoMetric, J: AlmostComplexStructure) -> bool:
    """Jᵀ φ J = φ"""
    return equal(J.matrix.transpose() * metric.phi * J.matrix, metric.phi)


# ---------- 판정 ----------

@dataclass(frozen=True)
class KahlerDecision:
    status: KahlerStatus
    compatible: CompatibleFamily
    witness: Optional[KForm] = None
    metric: Optional[PseudoMetric] = None

    @property
    def exists(self) -> bool:
        return self.status is KahlerStatus.KAHLER

    @property
    def certificate(self) -> str:
        if self.witness is not None:
            return f"Pf({self.witness}) = {pfaffian(self.witness)}"
        return "Pf restricted to the compatible family is the zero quadratic form"


def kahler_exists(g: LieAlgebra, J: AlmostComplexStructure,
                  cx: Optional[CochainComplex] = None) -> KahlerDecision:
    """적분가능하지 않은 J 에서 호환 심플렉틱 형식이 있으면 ALMOST_KAHLER"""
    compat = compatible_family(g, J, cx)
    if compat.family.pfaffian_is_zero():
        return KahlerDecision(KahlerStatus.NONE, compat)
    witness = compat.family.witness()
    if witness is None:
        return KahlerDecision(KahlerStatus.NONE, compat)
    status = KahlerStatus.KAHLER if compat.integrable else KahlerStatus.ALMOST_KAHLER
    decision = KahlerDecision(status, compat, witness, metric_from(witness, J))
    log.info("%s: %s with %s, signature %s", g.name, status.value, witness, decision.metric.signature)
    return decision


def kahler_over(g: LieAlgebra, structures: Iterable[AlmostComplexStructure],
                cx: Optional[CochainComplex] = None) -> Tuple[Optional[KahlerDecision], int]:
    """주어진 J 들 중 처음으로 KAHLER 가 되는 것. (결정, 시험한 J 개수)"""
    cx = cx or complex_of(g)
    tried = 0
    for J in structures:
        tried += 1
        decision = kahler_exists(g, J, cx)
        if decision.exists:
            return decision, tried
    return None, tried


# ---------- J 수송 ----------

def conjugate_structure(J: AlmostComplexStructure, x: DomainMatrix) -> AlmostComplexStructure:
    """x J x⁻¹"""
    return AlmostComplexStructure(x * J.matrix * inverse(x))


@dataclass(frozen=True)
class TransportCheck:
    transported: KForm            # ω'(X, Y) = ω(x⁻¹X, x⁻¹Y)
    transported_compatible: bool
    transported_closed: bool
    same_form_compatible: bool    # ω 자체가 J₂ 와 호환인지 (참고용)

    @property
    def ok(self) -> bool:
        return self.transported_compatible and self.transported_closed


def compatibility_transport_check(g: LieAlgebra, J1: AlmostComplexStructure, J2: AlmostComplexStructure,
                                  x: DomainMatrix, w: KForm) -> TransportCheck:
    if not is_automorphism(g, x):
        raise NotAutomorphismError(f"x is not an automorphism of {g.name}")
    if not equal(x * J1.matrix, J2.matrix * x):
        raise NotAutomorphismError("x does not intertwine J1 and J2 (x J1 ≠ J2 x)")
    if not is_compatible(w, J1):
        raise AsymmetricMetricError(f"{w} is not compatible with J1")
    moved = pullback(w, inverse(x))
    check = TransportCheck(
        transported=moved,
        transported_compatible=is_compatible(moved, J2),
        transported_closed=is_closed(g, moved),
        same_form_compatible=is_compatible(w, J2),
    )
    log.debug("transport %s → %s: %s", w, moved, check)
    return check


def diagonal_automorphisms(g: LieAlgebra, values: Sequence = (1, -1, 2, Fraction(1, 2))) -> List[DomainMatrix]:
    """diag(t1..tn), t_i ∈ values 중 항등이 아닌 자기동형 (결정적 순서)"""
    n = g.dim
    out = []
    scalars = [to_scalar(v) for v in values]
    for ts in product(scalars, repeat=n):
        if all(t == QQ.one for t in ts):
            continue
        x = DomainMatrix.diag(list(ts), QQ).to_dense()
        if is_automorphism(g, x):
            out.append(x)
    return out


# ---------- J_{μ,ν} family (r'2) ----------

def jmunu(mu, nu) -> AlmostComplexStructure:
    """
    J e1 = (μ/ν) e1 + ((μ²+ν²)/ν) e2,  J e2 = -(1/ν) e1 - (μ/ν) e2,
    J e3 = e4,  J e4 = -e3
    """
    mu, nu = to_scalar(mu), to_scalar(nu)
    if not nu:
        raise ParameterOutOfRangeError("nu must be nonzero")
    images = {
        1: [mu / nu, (mu * mu + nu * nu) / nu, QQ.zero, QQ.zero],
        2: [-QQ.one / nu, -mu / nu, QQ.zero, QQ.zero],
        3: [QQ.zero, QQ.zero, QQ.zero, QQ.one],
        4: [QQ.zero, QQ.zero, -QQ.one, QQ.zero],
    }
    return AlmostComplexStructure.from_images(images)


DEFAULT_MU = (-1, Fraction(-1, 2), 0, Fraction(1, 2), 1)
DEFAULT_NU = (-2, -1, Fraction(-1, 2), Fraction(1, 2), 1, 2)


@dataclass(frozen=True)
class FamilyScanPoint:
    mu: object
    nu: object
    integrable: bool
    status: KahlerStatus
    family_dim: int


def scan_kahler_family(g: LieAlgebra, mus: Sequence = DEFAULT_MU, nus: Sequence = DEFAULT_NU) -> List[FamilyScanPoint]:
    cx = complex_of(g)
    points = []
    for mu, nu in product(mus, nus):
        J = jmunu(mu, nu)
        decision = kahler_exists(g, J, cx)
        points.append(
            FamilyScanPoint(to_scalar(mu), to_scalar(nu), decision.compatible.integrable,
                            decision.status, decision.compatible.dimension)
        )
    solvable = [(p.mu, p.nu) for p in points if p.status is not KahlerStatus.NONE]
    log.info("%s: J_{mu,nu} scan, %d/%d point(s) with a compatible symplectic form",
             g.name, len(solvable), len(points))
    return points


def solvable_points(points: Iterable[FamilyScanPoint]) -> List[Tuple[object, object]]:
    return [(p.mu, p.nu) for p in points if p.status is not KahlerStatus.NONE]
