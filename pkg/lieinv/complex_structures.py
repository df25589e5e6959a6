# lieinv/complex_structures.py

"""
좌불변 복소구조

두 가지 관점을 모두 다룬다.
1) 실행렬 J (J² = -Id) + Nijenhuis 텐서
2) g^C 의 복소 부분대수 q = span{U, V}, g^C = q ⊕ σq  (q = J 의 -i 고유공간)

표의 𝒬 템플릿(미지수에 대해 아핀인 U, V)은 SubalgebraTemplate 로 컴파일해서
샘플 점 검증과 grid 탐색 결과의 포함 여부 확인에 쓴다.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from lieinv.errors import (
    DimensionMismatchError,
    NotAlmostComplexError,
    NotDirectSumError,
    NotIntegrableError,
    UnknownTemplateError,
)
from lieinv.lie import LieAlgebra, ad, bracket
from lieinv.linalg import (
    equal,
    format_number,
    identity,
    is_zero_vector,
    lift,
    mat_vec,
    matrix,
    nullspace,
    row_basis,
    solve,
    span_rank,
    to_gaussian,
    unit_vector,
    vec_conj,
    vec_sub,
)
from lieinv.symbolic import (
    free_unknowns,
    gaussian_vector,
    is_nonzero,
    param_subs,
    symbol,
    to_sympy,
    vector_coefficients,
)

log = logging.getLogger("lieinv.complex")

# ---------- 가우스 유리수 grid ----------

_HALF = QQ(1, 2)
GRIDS: Dict[str, Tuple] = {
    "small": (QQ_I.zero, QQ_I.one, -QQ_I.one, QQ_I(0, 1), QQ_I(0, -1)),
    "default": (
        QQ_I.zero, QQ_I.one, -QQ_I.one, QQ_I(0, 1), QQ_I(0, -1),
        QQ_I(_HALF, _HALF), QQ_I(-_HALF, -_HALF),
    ),
}


def grid_values(name: str) -> Tuple:
    if name not in GRIDS:
        raise KeyError(f"unknown grid {name!r} (known: {', '.join(GRIDS)})")
    return GRIDS[name]


# ---------- 거의 복소구조 ----------

@dataclass(frozen=True)
class AlmostComplexStructure:
    matrix: DomainMatrix   # j열 = J e_j

    def __post_init__(self):
        n, m = self.matrix.shape
        if n != m:
            raise NotAlmostComplexError("J must be square")
        if not equal(self.matrix * self.matrix, -identity(n)):
            raise NotAlmostComplexError("J*J is not -Id")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "AlmostComplexStructure":
        return cls(matrix(rows, QQ))

    @classmethod
    def from_images(cls, images: Mapping[int, Sequence]) -> "AlmostComplexStructure":
        """{1-based j: J e_j} → J"""
        n = len(images)
        cols = [list(images[j]) for j in range(1, n + 1)]
        return cls(matrix([[cols[c][r] for c in range(n)] for r in range(n)], QQ))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply(self, v: Sequence) -> list:
        return mat_vec(self.matrix, v)

    def image(self, j: int) -> list:
        """J e_j (0-based)"""
        return self.apply(unit_vector(self.dim, j))

    def negate(self) -> "AlmostComplexStructure":
        return AlmostComplexStructure(-self.matrix)

    def describe(self) -> str:
        return describe_j(self)


def _vector_text(v: Sequence) -> str:
    terms = []
    for i, c in enumerate(v):
        if not c:
            continue
        text = format_number(c)
        terms.append(f"e{i + 1}" if text == "1" else f"-e{i + 1}" if text == "-1" else f"{text}*e{i + 1}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def describe_j(J: AlmostComplexStructure) -> str:
    """'e1->e2, e2->-e1, ...' (모든 기저의 상)"""
    return ", ".join(f"e{j + 1}->{_vector_text(J.image(j))}" for j in range(J.dim))


def nijenhuis(g: LieAlgebra, J: AlmostComplexStructure, X: Sequence, Y: Sequence) -> list:
    """N_J(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]"""
    if J.dim != g.dim:
        raise DimensionMismatchError(f"J of size {J.dim} on algebra of dimension {g.dim}")
    JX, JY = J.apply(X), J.apply(Y)
    out = vec_sub(bracket(g, JX, JY), bracket(g, X, Y))
    out = vec_sub(out, J.apply(bracket(g, JX, Y)))
    return vec_sub(out, J.apply(bracket(g, X, JY)))


def nijenhuis_defects(g: LieAlgebra, J: AlmostComplexStructure) -> List[Tuple[int, int, list]]:
    n = g.dim
    out = []
    for i, j in combinations(range(n), 2):
        value = nijenhuis(g, J, unit_vector(n, i), unit_vector(n, j))
        if not is_zero_vector(value):
            out.append((i + 1, j + 1, value))
    return out


def is_integrable(g: LieAlgebra, J: AlmostComplexStructure) -> bool:
    return not nijenhuis_defects(g, J)


def is_abelian_structure(g: LieAlgebra, J: AlmostComplexStructure) -> bool:
    """[JX, JY] = [X, Y] 를 기저 쌍에서"""
    n = g.dim
    for i, j in combinations(range(n), 2):
        if bracket(g, J.image(i), J.image(j)) != g.basis_bracket(i, j):
            return False
    return True


def is_biinvariant(g: LieAlgebra, J: AlmostComplexStructure) -> bool:
    """J ∘ ad_X = ad_{JX} 를 기저 X 에서"""
    for i in range(g.dim):
        if not equal(J.matrix * ad(g, unit_vector(g.dim, i)), ad(g, J.image(i))):
            return False
    return True


def random_complex_structure(rng: random.Random, n: int = 4, spread: int = 2) -> AlmostComplexStructure:
    """P J0 P⁻¹ (P 는 작은 정수 성분의 가역행렬). 대부분 적분가능하지 않다."""
    j0 = [[QQ.zero] * n for _ in range(n)]
    for k in range(0, n, 2):
        j0[k + 1][k] = QQ.one
        j0[k][k + 1] = -QQ.one
    J0 = DomainMatrix(j0, (n, n), QQ)
    while True:
        P = matrix([[rng.randint(-spread, spread) for _ in range(n)] for _ in range(n)], QQ)
        if P.det():
            return AlmostComplexStructure(P * J0 * P.inv())


# ---------- 복소 부분대수 ----------

def _det(rows: Sequence[Sequence]):
    """작은 정사각행렬의 행렬식 (여인수 전개, QQ_I)"""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = QQ_I.zero
    for c in range(n):
        a = rows[0][c]
        if not a:
            continue
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = a * _det(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def direct_sum_ok(U: Sequence, V: Sequence) -> bool:
    """{U, V, σU, σV} 가 g^C 의 기저인지 (n = 4)"""
    U, V = lift(U), lift(V)
    if len(U) != 4:
        return span_rank([U, V, vec_conj(U), vec_conj(V)], QQ_I) == len(U)
    return bool(_det([U, V, vec_conj(U), vec_conj(V)]))


@dataclass(frozen=True)
class SubalgebraCertificate:
    closed: bool
    bracket: Tuple
    coefficients: Optional[Tuple] = None   # [U,V] = a U + b V
    beta: Optional[object] = None          # a = 0 일 때 [U,V] = βV
    degenerate: bool = False


def is_subalgebra(g: LieAlgebra, U: Sequence, V: Sequence) -> SubalgebraCertificate:
    U, V = lift(U), lift(V)
    W = bracket(g, U, V)
    if span_rank([U, V], QQ_I) < 2:
        return SubalgebraCertificate(True, tuple(W), degenerate=True)
    coeffs = solve(matrix([[U[i], V[i]] for i in range(g.dim)], QQ_I), W)
    if coeffs is None:
        return SubalgebraCertificate(False, tuple(W))
    a, b = coeffs
    return SubalgebraCertificate(True, tuple(W), (a, b), beta=b if not a else None)


def _closed_fast(g: LieAlgebra, U: list, V: list) -> bool:
    W = bracket(g, U, V)
    if not any(W):
        return True
    for cols in combinations(range(g.dim), 3):
        if _det([[U[c] for c in cols], [V[c] for c in cols], [W[c] for c in cols]]):
            return False
    return True


@dataclass(frozen=True)
class ComplexSubalgebra:
    U: Tuple
    V: Tuple
    beta: Optional[object] = None

    @classmethod
    def of(cls, U: Sequence, V: Sequence, beta=None) -> "ComplexSubalgebra":
        return cls(tuple(lift(U)), tuple(lift(V)), beta)

    @property
    def dim(self) -> int:
        return len(self.U)

    def direct_sum(self) -> bool:
        return direct_sum_ok(self.U, self.V)

    def conjugate(self) -> "ComplexSubalgebra":
        return ComplexSubalgebra(tuple(vec_conj(self.U)), tuple(vec_conj(self.V)))

    def key(self) -> Tuple:
        """span 의 reduced echelon 기저 (중복 제거용)"""
        return tuple(tuple(r) for r in row_basis([list(self.U), list(self.V)], self.dim, QQ_I))

    def same_space(self, other: "ComplexSubalgebra") -> bool:
        return self.key() == other.key()

    def describe(self) -> str:
        return f"<{_vector_text(self.U)}, {_vector_text(self.V)}>"


def j_from_subalgebra(q: ComplexSubalgebra) -> AlmostComplexStructure:
    """J = P diag(-i,-i,i,i) P⁻¹,  P = [U V σU σV]"""
    n = q.dim
    cols = [list(q.U), list(q.V), vec_conj(q.U), vec_conj(q.V)]
    if n != 4 or not direct_sum_ok(q.U, q.V):
        raise NotDirectSumError(f"{q.describe()}: U, V, σU, σV are not a basis")
    P = DomainMatrix([[c[i] for c in cols] for i in range(n)], (n, n), QQ_I)
    minus_i, plus_i = QQ_I(0, -1), QQ_I(0, 1)
    D = DomainMatrix.diag([minus_i, minus_i, plus_i, plus_i], QQ_I)
    JC = (P * D * P.inv()).to_list()
    if any(z.y for row in JC for z in row):
        raise NotDirectSumError(f"{q.describe()}: induced J is not real")
    return AlmostComplexStructure(DomainMatrix([[z.x for z in row] for row in JC], (n, n), QQ))


def subalgebra_from_j(g: LieAlgebra, J: AlmostComplexStructure) -> ComplexSubalgebra:
    """-i 고유공간. 괄호에 닫혀 있지 않으면 NotIntegrableError (그 괄호를 함께 싣는다)."""
    n = J.dim
    JC = DomainMatrix([lift(r) for r in J.matrix.to_list()], (n, n), QQ_I)
    M = JC + DomainMatrix.diag([QQ_I(0, 1)] * n, QQ_I)
    basis = nullspace(M)
    if len(basis) != n // 2 or n != 4:
        raise NotAlmostComplexError(f"-i eigenspace has dimension {len(basis)}")
    U, V = basis
    cert = is_subalgebra(g, U, V)
    if not cert.closed:
        raise NotIntegrableError(
            f"{g.name}: -i eigenspace of J is not a subalgebra, [U,V] = {_vector_text(cert.bracket)}",
            failing_bracket=cert.bracket,
        )
    return ComplexSubalgebra.of(U, V, cert.beta)


def integrable_by_eigenspace(g: LieAlgebra, J: AlmostComplexStructure) -> bool:
    try:
        subalgebra_from_j(g, J)
    except NotIntegrableError:
        return False
    return True


# ---------- 𝒬 템플릿 ----------

@dataclass(frozen=True)
class SubalgebraTemplate:
    """표의 𝒬 열 한 칸. U, V 는 e1..e4 의 sympy 1차식, nonzero 는 '≠ 0' 이어야 하는 식."""
    case: str
    template_id: str
    U: object
    V: object
    nonzero: Optional[object] = None
    suspected: str = ""

    def expand_eps(self) -> List["SubalgebraTemplate"]:
        """ε = ±1 을 두 템플릿으로"""
        eps = symbol("eps")
        exprs = [self.U, self.V] + ([self.nonzero] if self.nonzero is not None else [])
        if not any(eps in sympy.sympify(e).free_symbols for e in exprs):
            return [self]
        out = []
        for s in (1, -1):
            sub = {eps: s}
            out.append(
                SubalgebraTemplate(
                    self.case,
                    f"{self.template_id}[eps={s}]",
                    sympy.sympify(self.U).subs(sub),
                    sympy.sympify(self.V).subs(sub),
                    None if self.nonzero is None else sympy.sympify(self.nonzero).subs(sub),
                    self.suspected,
                )
            )
        return out

    def compile(self, params: Mapping[str, object], dim: int = 4) -> "CompiledTemplate":
        subs = param_subs(params)
        u = [sympy.expand(c.subs(subs)) for c in vector_coefficients(sympy.sympify(self.U), dim)]
        v = [sympy.expand(c.subs(subs)) for c in vector_coefficients(sympy.sympify(self.V), dim)]
        unknowns = free_unknowns(u + v)
        zero = {x: 0 for x in unknowns}

        def split(coeffs):
            const = gaussian_vector(coeffs, zero)
            parts = []
            for x in unknowns:
                parts.append(gaussian_vector([sympy.diff(c, x) for c in coeffs], zero))
                for c in coeffs:
                    if sympy.diff(c, x, 2) != 0 or any(sympy.diff(c, x, y) != 0 for y in unknowns):
                        raise UnknownTemplateError(f"{self.template_id}: template is not affine in {x}")
            return const, parts

        u0, uparts = split(u)
        v0, vparts = split(v)
        cond = None if self.nonzero is None else sympy.sympify(self.nonzero).subs(subs)
        return CompiledTemplate(self, dict(params), unknowns, u0, uparts, v0, vparts, cond)


@dataclass(frozen=True)
class CompiledTemplate:
    template: SubalgebraTemplate
    params: Dict[str, object]
    unknowns: Tuple
    u0: list
    uparts: List[list]
    v0: list
    vparts: List[list]
    condition: Optional[object] = None

    @property
    def template_id(self) -> str:
        return self.template.template_id

    def instantiate(self, values: Sequence) -> Tuple[list, list]:
        U, V = list(self.u0), list(self.v0)
        for x, up, vp in zip(values, self.uparts, self.vparts):
            if not x:
                continue
            U = [a + x * b for a, b in zip(U, up)]
            V = [a + x * b for a, b in zip(V, vp)]
        return U, V

    def constraint_holds(self, values: Sequence) -> bool:
        if self.condition is None:
            return True
        subs = {x: to_sympy(v) for x, v in zip(self.unknowns, values)}
        return is_nonzero(self.condition, subs)

    def covers(self, q: ComplexSubalgebra) -> Optional[Tuple]:
        """
        span{U_T(x), V_T(x)} = span{U, V} 인 x 를 찾는다 (조건 포함).
        U_T(x) = s1 U + s2 V, V_T(x) = s3 U + s4 V 는 (x, s) 에 대해 1차 연립방정식.
        """
        n = len(q.U)
        m = len(self.unknowns)
        rows, rhs = [], []
        for target, base, parts, s_off in ((0, self.u0, self.uparts, 0), (1, self.v0, self.vparts, 2)):
            for i in range(n):
                row = [p[i] for p in parts] + [QQ_I.zero] * 4
                row[m + s_off] = -q.U[i]
                row[m + s_off + 1] = -q.V[i]
                rows.append(row)
                rhs.append(-base[i])
        sol = solve(DomainMatrix(rows, (2 * n, m + 4), QQ_I), rhs)
        if sol is None:
            return None
        x, s = sol[:m], sol[m:]
        if not (s[0] * s[3] - s[1] * s[2]):
            return None
        if not self.constraint_holds(x):
            return None
        return tuple(x)

    def describe_assignment(self, values: Sequence) -> str:
        return ",".join(f"{x}={format_number(v)}" for x, v in zip(self.unknowns, values))


@dataclass(frozen=True)
class GeneralFormInstance:
    case: str
    template_id: str
    params: Dict[str, object]
    assignment: Dict[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class GeneralFormVerdict:
    template_id: str
    assignment: str
    constraint_ok: bool
    closed: bool
    direct_sum: bool

    @property
    def valid(self) -> bool:
        return self.constraint_ok and self.closed and self.direct_sum


def find_template(templates: Iterable[SubalgebraTemplate], case: str, template_id: str) -> SubalgebraTemplate:
    for t in templates:
        for expanded in t.expand_eps():
            if expanded.case == case and expanded.template_id == template_id:
                return expanded
    raise UnknownTemplateError(f"no template {template_id!r} for case {case}")


def verify_compiled(g: LieAlgebra, ct: CompiledTemplate, values: Sequence) -> GeneralFormVerdict:
    U, V = ct.instantiate(values)
    return GeneralFormVerdict(
        template_id=ct.template_id,
        assignment=ct.describe_assignment(values),
        constraint_ok=ct.constraint_holds(values),
        closed=is_subalgebra(g, U, V).closed,
        direct_sum=direct_sum_ok(U, V),
    )


def verify_general_form(g: LieAlgebra, inst: GeneralFormInstance,
                        templates: Iterable[SubalgebraTemplate]) -> GeneralFormVerdict:
    ct = find_template(templates, inst.case, inst.template_id).compile(inst.params, g.dim)
    names = {x.name for x in ct.unknowns}
    unknown = sorted(set(inst.assignment) - names)
    if unknown:
        raise UnknownTemplateError(f"{inst.template_id}: no coefficient(s) {', '.join(unknown)}")
    values = [to_gaussian(inst.assignment.get(x.name, 0)) for x in ct.unknowns]
    return verify_compiled(g, ct, values)


def template_samples(ct: CompiledTemplate, grid: Sequence, want: int = 5) -> Tuple[List[Tuple], List[Tuple]]:
    """grid 위 할당을 순서대로 훑어 조건을 만족하는 것 want 개와 위반하는 것 하나"""
    good: List[Tuple] = []
    bad: List[Tuple] = []
    for values in product(grid, repeat=len(ct.unknowns)):
        if ct.constraint_holds(values):
            if len(good) < want:
                good.append(values)
        elif not bad:
            bad.append(values)
        if len(good) >= want and (bad or ct.condition is None):
            break
    return good, bad


# ---------- grid 탐색 ----------

@dataclass(frozen=True)
class GridSearchResult:
    hits: Tuple[ComplexSubalgebra, ...]
    enumerated: int
    truncated: bool


def _normalized_ansatz(n: int, grid: Sequence) -> Iterator[Tuple[list, list]]:
    """
    reduced echelon 꼴: pivot p < l 에 대해
    U = e_p + Σ u_m e_m (m > p, m ≠ l), V = e_l + Σ v_m e_m (m > l).
    같은 부분공간은 한 번만 나온다.
    """
    for p, l in combinations(range(n), 2):
        u_free = [m for m in range(p + 1, n) if m != l]
        v_free = list(range(l + 1, n))
        for uvals in product(grid, repeat=len(u_free)):
            U = [QQ_I.zero] * n
            U[p] = QQ_I.one
            for m, x in zip(u_free, uvals):
                U[m] = x
            for vvals in product(grid, repeat=len(v_free)):
                V = [QQ_I.zero] * n
                V[l] = QQ_I.one
                for m, x in zip(v_free, vvals):
                    V[m] = x
                yield U, V


def _literal_ansatz(n: int, grid: Sequence) -> Iterator[Tuple[list, list]]:
    """U = e_n + a1 e1 + .. , V = a2 e1 + .. (마지막 기저를 U 가 갖는 꼴 그대로)"""
    for uvals in product(grid, repeat=n - 1):
        U = list(uvals) + [QQ_I.one]
        for vvals in product(grid, repeat=n - 1):
            yield U, list(vvals) + [QQ_I.zero]


def grid_search_subalgebras(g: LieAlgebra, grid: Sequence, normalized: bool = True,
                            cap: int = 1_000_000) -> GridSearchResult:
    n = g.dim
    grid = [to_gaussian(x) for x in grid]
    source = _normalized_ansatz(n, grid) if normalized else _literal_ansatz(n, grid)
    seen = set()
    hits: List[ComplexSubalgebra] = []
    count = 0
    truncated = False
    for U, V in source:
        if count >= cap:
            truncated = True
            log.warning("%s: grid search stopped at cap %d", g.name, cap)
            break
        count += 1
        if not direct_sum_ok(U, V) or not _closed_fast(g, U, V):
            continue
        q = ComplexSubalgebra.of(U, V, is_subalgebra(g, U, V).beta)
        key = q.key()
        if key in seen:
            continue
        seen.add(key)
        hits.append(q)
    log.info("%s: %d subalgebra(s) from %d ansatz instances", g.name, len(hits), count)
    return GridSearchResult(tuple(hits), count, truncated)


def match_templates(q: ComplexSubalgebra, compiled: Sequence[CompiledTemplate]) -> Optional[Tuple[str, str]]:
    """q (또는 σq) 를 포함하는 첫 템플릿 → (template_id, 할당 문자열)"""
    for candidate in (q, q.conjugate()):
        for ct in compiled:
            x = ct.covers(candidate)
            if x is not None:
                return ct.template_id, ct.describe_assignment(x)
    return None


def abelian_subalgebra(g: LieAlgebra, q: ComplexSubalgebra) -> bool:
    return is_zero_vector(bracket(g, list(q.U), list(q.V)))


