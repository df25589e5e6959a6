# lieinv/linalg.py

"""
정확한 유리수(ℚ) / 가우스 유리수(ℚ(i)) 선형대수

- Scalar         : sympy QQ 원소 (항상 기약분수, 분모 양수)
- GaussianScalar : sympy QQ_I 원소 (re, im 이 QQ)
- ExactMatrix    : sympy DomainMatrix (dense, QQ 또는 QQ_I)

모든 함수는 순수 함수이고 부동소수점을 쓰지 않는다.
벡터는 도메인 원소의 list 로 주고받는다.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import sympy
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import CoercionFailed

Scalar = type(QQ.one)
GaussianScalar = type(QQ_I.one)
ExactMatrix = DomainMatrix
Vector = List

NumberLike = Union[int, str, Fraction, "Scalar", "GaussianScalar", sympy.Expr]


# ---------- 스칼라 변환 ----------

def to_scalar(value: NumberLike):
    """int, "3/5", Fraction, sympy Rational, QQ 원소 → QQ 원소. 읽을 수 없으면 ValueError."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        raise ValueError("bool is not a scalar")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    try:
        if isinstance(value, str):
            value = sympy.Rational(value.strip())
        expr = sympy.sympify(value)
    except (TypeError, ZeroDivisionError, sympy.SympifyError) as e:
        raise ValueError(f"not an exact rational: {value!r}") from e
    if not expr.is_Rational:
        raise ValueError(f"not an exact rational: {value!r}")
    return QQ(int(expr.p), int(expr.q))


def to_gaussian(value: NumberLike):
    """정수/유리수/QQ 원소/"1+i" 같은 문자열 → QQ_I 원소. 읽을 수 없으면 ValueError."""
    if isinstance(value, GaussianScalar):
        return value
    try:
        if isinstance(value, str):
            text = value.strip().replace("i", "I")
            return QQ_I.from_sympy(sympy.expand(sympy.sympify(text)))
        if isinstance(value, sympy.Expr):
            return QQ_I.from_sympy(sympy.expand(value))
    except (TypeError, ZeroDivisionError, sympy.SympifyError, CoercionFailed) as e:
        raise ValueError(f"not a Gaussian rational: {value!r}") from e
    return QQ_I(to_scalar(value), QQ.zero)


def scalar_to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def format_scalar(q) -> str:
    f = scalar_to_fraction(q)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_gaussian(z) -> str:
    re_, im_ = z.x, z.y
    if not im_:
        return format_scalar(re_)
    im_text = {1: "i", -1: "-i"}.get(scalar_to_fraction(im_), f"{format_scalar(im_)}*i")
    if not re_:
        return im_text
    if im_text.startswith("-"):
        return f"{format_scalar(re_)}{im_text}"
    return f"{format_scalar(re_)}+{im_text}"


def format_number(z) -> str:
    return format_gaussian(z) if isinstance(z, GaussianScalar) else format_scalar(z)


# ---------- 벡터 ----------

def domain_of(*vectors: Sequence):
    for v in vectors:
        for x in v:
            if isinstance(x, GaussianScalar):
                return QQ_I
    return QQ


def lift(v: Sequence) -> list:
    """실벡터를 QQ_I 로 올린다 (이미 복소면 그대로)"""
    return [x if isinstance(x, GaussianScalar) else QQ_I(x, QQ.zero) for x in v]


def unit_vector(n: int, i: int, domain=QQ) -> list:
    v = [domain.zero] * n
    v[i] = domain.one
    return v


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def vec_add(u: Sequence, v: Sequence) -> list:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: Sequence, v: Sequence) -> list:
    return [a - b for a, b in zip(u, v)]


def vec_conj(v: Sequence) -> list:
    return [QQ_I(x.x, -x.y) for x in lift(v)]


# ---------- 행렬 ----------

def matrix(rows: Sequence[Sequence], domain=None, cols: Optional[int] = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    if domain is None:
        domain = domain_of(*rows)
    if domain is QQ_I:
        rows = [lift(r) for r in rows]
    else:
        rows = [[to_scalar(x) for x in r] for r in rows]
    ncols = len(rows[0]) if rows else (cols or 0)
    return DomainMatrix(rows, (len(rows), ncols), domain)


def from_columns(columns: Sequence[Sequence], rows: int, domain=None) -> DomainMatrix:
    if not columns:
        return DomainMatrix.zeros((rows, 0), domain or QQ)
    return matrix([[col[i] for col in columns] for i in range(rows)], domain)


def identity(n: int, domain=QQ) -> DomainMatrix:
    return DomainMatrix.eye(n, domain).to_dense()


def equal(A: DomainMatrix, B: DomainMatrix) -> bool:
    """성분 비교 (DomainMatrix 의 == 는 dense/sparse 표현이 다르면 False)"""
    return A.shape == B.shape and A.to_list() == B.to_list()


def entries(M: DomainMatrix) -> List[list]:
    return M.to_list()


def mat_vec(M: DomainMatrix, v: Sequence) -> list:
    rows = M.to_list()
    if M.domain is QQ_I or domain_of(v) is QQ_I:
        rows = [lift(r) for r in rows]
        v = lift(v)
    zero = QQ_I.zero if M.domain is QQ_I or domain_of(v) is QQ_I else QQ.zero
    out = []
    for r in rows:
        acc = zero
        for a, b in zip(r, v):
            if a and b:
                acc += a * b
        out.append(acc)
    return out


def is_zero_matrix(M: DomainMatrix) -> bool:
    return all(not x for row in M.to_list() for x in row)


# ---------- rank / rref / nullspace / solve ----------

def rref(M: DomainMatrix) -> Tuple[DomainMatrix, Tuple[int, ...]]:
    rows, cols = M.shape
    if rows == 0 or cols == 0:
        return M, ()
    reduced, pivots = M.rref()
    return reduced, tuple(pivots)


def rank(M: DomainMatrix) -> int:
    """정확한 체 위에서의 rank (0행/0열이면 0)"""
    return len(rref(M)[1])


def nullspace(M: DomainMatrix) -> List[list]:
    """커널 기저. 자유변수 하나를 1로 두는 표준 기저이므로 결정적이다."""
    rows, cols = M.shape
    domain = M.domain
    if cols == 0:
        return []
    if rows == 0:
        return [unit_vector(cols, j, domain) for j in range(cols)]
    reduced, pivots = rref(M)
    red = reduced.to_list()
    basis = []
    for free in range(cols):
        if free in pivots:
            continue
        v = [domain.zero] * cols
        v[free] = domain.one
        for r, p in enumerate(pivots):
            v[p] = -red[r][free]
        basis.append(v)
    return basis


def solve(M: DomainMatrix, b: Sequence) -> Optional[list]:
    """Mx = b 의 특수해 하나 (없으면 None). 자유변수는 0."""
    rows, cols = M.shape
    domain = QQ_I if (M.domain is QQ_I or domain_of(b) is QQ_I) else QQ
    if rows == 0:
        return [domain.zero] * cols
    base = M.to_list()
    if domain is QQ_I:
        base = [lift(r) for r in base]
        b = lift(b)
    augmented = DomainMatrix([list(r) + [b[i]] for i, r in enumerate(base)], (rows, cols + 1), domain)
    reduced, pivots = augmented.rref()
    if cols in pivots:
        return None
    red = reduced.to_list()
    x = [domain.zero] * cols
    for r, p in enumerate(pivots):
        x[p] = red[r][cols]
    return x


def row_basis(vectors: Sequence[Sequence], n: int, domain=None) -> List[list]:
    """벡터들이 생성하는 부분공간의 reduced echelon 기저"""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    M = matrix(vectors, domain)
    reduced, pivots = rref(M)
    return [list(r) for r in reduced.to_list()[: len(pivots)]]


def span_rank(vectors: Sequence[Sequence], domain=None) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return rank(matrix(vectors, domain))


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    domain = domain_of(v, *vectors)
    return span_rank(list(vectors) + [v], domain) == span_rank(vectors, domain)


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """부분공간 동등성 (행공간 비교)"""
    domain = domain_of(*a, *b)
    ra = span_rank(a, domain)
    return ra == span_rank(b, domain) and ra == span_rank(list(a) + list(b), domain)


def coordinates(basis: Sequence[Sequence], v: Sequence) -> Optional[list]:
    """v = Σ x_i basis_i 인 x (basis 가 독립일 때 유일), 없으면 None"""
    if not basis:
        return [] if is_zero_vector(v) else None
    n = len(v)
    M = from_columns(basis, n, domain_of(v, *basis))
    return solve(M, v)


def determinant(M: DomainMatrix):
    rows, cols = M.shape
    if rows == 0:
        return M.domain.one
    return M.det()


def inverse(M: DomainMatrix) -> DomainMatrix:
    return M.inv()


# ---------- 합동 대각화 (Sylvester) ----------

def congruence_diagonalize(B: DomainMatrix) -> Tuple[list, DomainMatrix]:
    """
    대칭행렬 B 에 대해 PᵀBP = D (대각) 인 (D 대각성분, P) 를 돌려준다.
    대각 pivot 이 0이면 다른 대각과 교환하고, 그것도 없으면 j열/행을 k에 더해서 만든다.
    """
    n, m = B.shape
    if n != m:
        raise ValueError("congruence_diagonalize needs a square matrix")
    A = [[to_scalar(x) for x in row] for row in B.to_list()]
    for i in range(n):
        for j in range(i + 1, n):
            if A[i][j] != A[j][i]:
                raise ValueError("congruence_diagonalize needs a symmetric matrix")
    P = [[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)]

    def swap(k: int, j: int) -> None:
        A[k], A[j] = A[j], A[k]
        for row in A:
            row[k], row[j] = row[j], row[k]
        for row in P:
            row[k], row[j] = row[j], row[k]

    def add_into(k: int, j: int, f) -> None:
        # col_k += f col_j, row_k += f row_j
        for row in A:
            row[k] += f * row[j]
        for c in range(n):
            A[k][c] += f * A[j][c]
        for row in P:
            row[k] += f * row[j]

    for k in range(n):
        if not A[k][k]:
            j = next((j for j in range(k + 1, n) if A[j][j]), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if A[k][j]), None)
                if j is None:
                    continue
                add_into(k, j, QQ.one)
        pivot = A[k][k]
        for i in range(k + 1, n):
            if A[i][k]:
                add_into(i, k, -(A[i][k] / pivot))

    diagonal = [A[i][i] for i in range(n)]
    return diagonal, DomainMatrix(P, (n, n), QQ)


def inertia(diagonal: Sequence) -> Tuple[int, int, int]:
    """(양수 개수, 음수 개수, 0 개수)"""
    pos = sum(1 for d in diagonal if d > 0)
    neg = sum(1 for d in diagonal if d < 0)
    return pos, neg, len(diagonal) - pos - neg
