# lieinv/lie.py

"""
구조상수로 주어진 Lie 대수

[e_i, e_j] = Σ_k c^k_{ij} e_k  (인덱스는 내부적으로 0-based, 입출력은 1-based)
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from lieinv.errors import DimensionMismatchError, JacobiError
from lieinv.linalg import (
    GaussianScalar,
    format_scalar,
    is_zero_vector,
    lift,
    mat_vec,
    row_basis,
    span_rank,
    to_scalar,
    unit_vector,
    vec_add,
)

log = logging.getLogger("lieinv.lie")

# (i, j) 1-based → {k: 계수}
BracketTable = Mapping[Tuple[int, int], Mapping[int, object]]


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    structure: Tuple[Tuple[Tuple[object, ...], ...], ...]
    name: str = "g"
    params: Dict[str, object] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_brackets(cls, dim: int, brackets: BracketTable, name: str = "g",
                      params: Optional[Dict[str, object]] = None) -> "LieAlgebra":
        """1-based 괄호표에서 만든다. 반대칭 짝은 자동으로 채운다."""
        c = [[[QQ.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), images in brackets.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise DimensionMismatchError(f"bracket [{i},{j}] outside dimension {dim}")
            if i == j:
                if any(to_scalar(v) for v in images.values()):
                    raise DimensionMismatchError(f"[e{i},e{i}] must vanish")
                continue
            for k, coeff in images.items():
                if not 1 <= k <= dim:
                    raise DimensionMismatchError(f"basis index e{k} outside dimension {dim}")
                value = to_scalar(coeff)
                c[i - 1][j - 1][k - 1] += value
                c[j - 1][i - 1][k - 1] -= value
        structure = tuple(tuple(tuple(row) for row in plane) for plane in c)
        return cls(dim=dim, structure=structure, name=name, params=dict(params or {}))

    @classmethod
    def abelian(cls, dim: int, name: str = "a") -> "LieAlgebra":
        return cls.from_brackets(dim, {}, name=name)

    def constant(self, k: int, i: int, j: int):
        """c^k_{ij} (0-based)"""
        return self.structure[i][j][k]

    def basis_bracket(self, i: int, j: int) -> list:
        return list(self.structure[i][j])

    def brackets(self) -> Dict[Tuple[int, int], Dict[int, object]]:
        """0이 아닌 괄호만 1-based 로"""
        out = {}
        for i, j in combinations(range(self.dim), 2):
            images = {k + 1: v for k, v in enumerate(self.structure[i][j]) if v}
            if images:
                out[(i + 1, j + 1)] = images
        return out

    def describe(self) -> str:
        parts = []
        for (i, j), images in self.brackets().items():
            terms = " + ".join(f"{format_scalar(v)}*e{k}" for k, v in images.items())
            parts.append(f"[e{i},e{j}] = {terms}")
        return ", ".join(parts) if parts else "abelian"

    def with_structure(self, structure, name: Optional[str] = None) -> "LieAlgebra":
        return LieAlgebra(self.dim, structure, name or self.name, dict(self.params))


def _check_length(g: LieAlgebra, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != g.dim:
            raise DimensionMismatchError(f"vector of length {len(v)} for dimension {g.dim}")


def bracket(g: LieAlgebra, X: Sequence, Y: Sequence) -> list:
    """[X, Y] = Σ X_i Y_j c^k_{ij} e_k. 복소벡터가 섞이면 QQ_I 에서 계산한다."""
    _check_length(g, X, Y)
    complex_mode = any(isinstance(x, GaussianScalar) for x in list(X) + list(Y))
    if complex_mode:
        X, Y = lift(X), lift(Y)
        zero = QQ_I.zero
    else:
        zero = QQ.zero
    out = [zero] * g.dim
    for i, xi in enumerate(X):
        if not xi:
            continue
        for j, yj in enumerate(Y):
            if not yj or i == j:
                continue
            w = xi * yj
            for k, c in enumerate(g.structure[i][j]):
                if c:
                    out[k] += (QQ_I(c, QQ.zero) if complex_mode else c) * w
    return out


def jacobi_defect(g: LieAlgebra) -> List[Tuple[int, int, int, list]]:
    """i<j<l 마다 [[ei,ej],el] + [[ej,el],ei] + [[el,ei],ej] 가 0이 아니면 (1-based) 기록"""
    n = g.dim
    defects = []
    for i, j, l in combinations(range(n), 3):
        ei, ej, el = (unit_vector(n, t) for t in (i, j, l))
        total = vec_add(
            vec_add(bracket(g, bracket(g, ei, ej), el), bracket(g, bracket(g, ej, el), ei)),
            bracket(g, bracket(g, el, ei), ej),
        )
        if not is_zero_vector(total):
            defects.append((i + 1, j + 1, l + 1, total))
    return defects


def antisymmetry_defect(g: LieAlgebra) -> List[Tuple[int, int]]:
    out = []
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(g.dim):
                if g.structure[i][j][k] != -g.structure[j][i][k]:
                    out.append((i + 1, j + 1))
                    break
    return out


def require_lie(g: LieAlgebra) -> None:
    defects = jacobi_defect(g)
    if defects:
        i, j, l, _ = defects[0]
        raise JacobiError(f"{g.name}: Jacobi identity fails on (e{i}, e{j}, e{l})")


def derived_subalgebra(g: LieAlgebra) -> List[list]:
    """span{[e_i, e_j]} 의 reduced echelon 기저"""
    images = [g.basis_bracket(i, j) for i, j in combinations(range(g.dim), 2)]
    return row_basis([v for v in images if not is_zero_vector(v)], g.dim)


def derived_series(g: LieAlgebra, max_steps: int = 16) -> List[List[list]]:
    """g ⊇ g' ⊇ g'' ⊇ ... (부분공간 기저 목록). 0 에 도달하거나 멈추면 끝."""
    current = [unit_vector(g.dim, i) for i in range(g.dim)]
    series = [current]
    for _ in range(max_steps):
        images = [bracket(g, u, v) for u, v in combinations(current, 2)]
        nxt = row_basis([v for v in images if not is_zero_vector(v)], g.dim)
        series.append(nxt)
        if not nxt or len(nxt) == len(current):
            break
        current = nxt
    return series


def lower_central_series(g: LieAlgebra, max_steps: int = 16) -> List[List[list]]:
    full = [unit_vector(g.dim, i) for i in range(g.dim)]
    current = full
    series = [current]
    for _ in range(max_steps):
        images = [bracket(g, u, v) for u in full for v in current]
        nxt = row_basis([v for v in images if not is_zero_vector(v)], g.dim)
        series.append(nxt)
        if not nxt or len(nxt) == len(current):
            break
        current = nxt
    return series


def is_solvable(g: LieAlgebra) -> bool:
    return not derived_series(g)[-1]


def is_nilpotent(g: LieAlgebra) -> bool:
    return not lower_central_series(g)[-1]


def ad(g: LieAlgebra, X: Sequence) -> DomainMatrix:
    """Y ↦ [X, Y] 의 행렬 (j열 = [X, e_j])"""
    _check_length(g, X)
    domain = QQ_I if any(isinstance(x, GaussianScalar) for x in X) else QQ
    n = g.dim
    cols = [bracket(g, X, unit_vector(n, j, domain)) for j in range(n)]
    return DomainMatrix([[cols[j][i] for j in range(n)] for i in range(n)], (n, n), domain)


def is_unimodular(g: LieAlgebra) -> bool:
    """모든 basis 에 대해 tr ad(e_i) = 0"""
    n = g.dim
    for i in range(n):
        if sum((g.structure[i][j][j] for j in range(n)), QQ.zero):
            return False
    return True


def apply_map(x: DomainMatrix, v: Sequence) -> list:
    return mat_vec(x, v)


def is_automorphism(g: LieAlgebra, x: DomainMatrix) -> bool:
    """x 가역이고 x[e_i,e_j] = [x e_i, x e_j] (모든 i<j)"""
    n = g.dim
    if x.shape != (n, n) or span_rank(x.to_list()) != n:
        return False
    images = [apply_map(x, unit_vector(n, i)) for i in range(n)]
    for i, j in combinations(range(n), 2):
        lhs = apply_map(x, g.basis_bracket(i, j))
        rhs = bracket(g, images[i], images[j])
        if any(a != b for a, b in zip(lhs, rhs)):
            return False
    return True


def rescale_basis(g: LieAlgebra, factors: Sequence) -> LieAlgebra:
    """e_i → t_i e_i 로 바꾼 구조상수: c'^k_{ij} = t_i t_j / t_k · c^k_{ij}"""
    t = [to_scalar(f) for f in factors]
    n = g.dim
    structure = tuple(
        tuple(tuple(g.structure[i][j][k] * t[i] * t[j] / t[k] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return g.with_structure(structure, name=f"{g.name}~")
