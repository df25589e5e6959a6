# lieinv/symbolic.py

"""
표(YAML)에 적힌 sympy 문자열을 읽는 공용 도구

- 벡터  : e1..e9 기호의 1차식          'e1 + b1*e2 + d1*e4'
- 형식  : e12, e134 같은 기호의 1차식   'a12*e12 + a13*(e13 - e24)'
- 조건  : sympy 불리언/수식              'Eq(lam, -1)', 'im(b1)*im(d2)'
gamma, beta 처럼 sympy 함수와 이름이 겹치는 기호는 모두 Symbol 로 고정한다.
"""

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ, QQ_I

from lieinv.errors import TablesError
from lieinv.linalg import GaussianScalar, Scalar, to_gaussian, to_scalar

PARAM_NAMES = ("lam", "gamma", "delta", "alpha", "beta", "mu", "nu", "eps", "t")
UNKNOWN_NAMES = tuple(f"{c}{k}" for c in "abcd" for k in (1, 2))


@lru_cache(maxsize=None)
def namespace(dim: int = 4) -> Dict[str, object]:
    ns: Dict[str, object] = {"I": sympy.I}
    for name in PARAM_NAMES + UNKNOWN_NAMES:
        ns[name] = sympy.Symbol(name)
    for i in range(1, dim + 1):
        ns[f"e{i}"] = sympy.Symbol(f"e{i}")
    for k in (2, 3):
        for idx in combinations(range(1, dim + 1), k):
            name = "e" + "".join(map(str, idx))
            ns[name] = sympy.Symbol(name)
    # a12, a13_24 … 같은 계수 이름은 그때그때 Symbol 로 만들어진다
    return ns


def parse_expr(text: str, dim: int = 4):
    try:
        return sympy.sympify(text, locals=dict(namespace(dim)))
    except (sympy.SympifyError, SyntaxError, TypeError) as e:
        raise TablesError(f"cannot read expression {text!r}: {e}") from e


def symbol(name: str) -> sympy.Symbol:
    return namespace()[name] if name in namespace() else sympy.Symbol(name)


def to_sympy(value):
    """QQ / QQ_I / Fraction / int → sympy 수"""
    if isinstance(value, GaussianScalar):
        return QQ_I.to_sympy(value)
    if isinstance(value, Scalar):
        return QQ.to_sympy(value)
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.sympify(value)


def param_subs(params: Mapping[str, object]) -> Dict[sympy.Symbol, object]:
    return {symbol(k): to_sympy(v) for k, v in params.items()}


def truth(expr, params: Mapping[str, object]) -> bool:
    """'Eq(lam, -1) & Ne(beta, 1)' 같은 조건을 파라미터에서 평가"""
    if expr is True or expr is False:
        return bool(expr)
    value = expr.subs(param_subs(params)) if hasattr(expr, "subs") else expr
    value = sympy.simplify(value)
    if value in (sympy.true, sympy.false):
        return bool(value)
    raise TablesError(f"condition {expr} is not decided at {dict(params)}")


def is_nonzero(expr, subs: Mapping) -> bool:
    value = sympy.nsimplify(sympy.expand(expr.subs(subs))) if hasattr(expr, "subs") else expr
    return sympy.simplify(value) != 0


def vector_coefficients(expr, dim: int = 4) -> List:
    """e1..en 의 1차식 → 계수 sympy 식 목록 (상수항이 있으면 오류)"""
    expr = sympy.expand(expr)
    basis = [namespace(dim)[f"e{i}"] for i in range(1, dim + 1)]
    coeffs = [expr.coeff(b) for b in basis]
    rest = sympy.expand(expr - sum(c * b for c, b in zip(coeffs, basis)))
    if rest != 0:
        raise TablesError(f"{expr} is not linear in e1..e{dim}")
    return coeffs


def form_coefficients(expr, degree: int, dim: int = 4) -> Dict[Tuple[int, ...], object]:
    """e12, e134 … 기호의 1차식 → {0-based 인덱스: 계수식}"""
    expr = sympy.expand(expr)
    ns = namespace(dim)
    out: Dict[Tuple[int, ...], object] = {}
    rest = expr
    for idx in combinations(range(1, dim + 1), degree):
        name = "e" + "".join(map(str, idx))
        c = expr.coeff(ns[name])
        if c != 0:
            out[tuple(i - 1 for i in idx)] = c
            rest -= c * ns[name]
    if sympy.expand(rest) != 0:
        raise TablesError(f"{expr} is not a linear combination of degree-{degree} monomials")
    return out


def exact_number(expr, gaussian: bool = False):
    """sympy 상수식 → QQ (또는 QQ_I)"""
    expr = sympy.nsimplify(sympy.expand(expr))
    if gaussian:
        return to_gaussian(expr)
    if not expr.is_Rational:
        raise TablesError(f"{expr} is not an exact rational")
    return to_scalar(expr)


def gaussian_vector(exprs: Sequence, subs: Mapping) -> list:
    return [to_gaussian(sympy.expand(sympy.sympify(e).subs(subs))) for e in exprs]


def free_unknowns(exprs: Sequence) -> Tuple[sympy.Symbol, ...]:
    """식들에 나오는 미지수(a1..d2)를 이름 순서로"""
    names = set()
    for e in exprs:
        names |= {s.name for s in sympy.sympify(e).free_symbols if s.name in UNKNOWN_NAMES}
    return tuple(symbol(n) for n in UNKNOWN_NAMES if n in names)


# ---------- 표의 2-형식 family ----------

_FORM_SYMBOL = re.compile(r"^e\d+$")


def coefficient_symbols(expr) -> Tuple[sympy.Symbol, ...]:
    """e12 같은 형식 기호와 파라미터를 뺀 나머지 기호 (이름순)"""
    names = {s.name for s in expr.free_symbols}
    names -= set(PARAM_NAMES)
    return tuple(sympy.Symbol(n) for n in sorted(n for n in names if not _FORM_SYMBOL.match(n)))


def form_family(text: str, params: Mapping[str, object], degree: int = 2,
                dim: int = 4) -> Tuple[Tuple[str, ...], List[list]]:
    """
    'a12*e12 + a13_24*(e13 - e24)' → (계수 이름들, 계수마다의 형식 벡터).
    계수에 대해 1차가 아니면 TablesError.
    """
    expr = sympy.expand(parse_expr(text, dim).subs(param_subs(params)))
    coeffs = coefficient_symbols(expr)
    zero = {c: 0 for c in coeffs}
    if sympy.expand(expr.subs(zero)) != 0:
        raise TablesError(f"{text!r} has a term without a coefficient")
    vectors = []
    for c in coeffs:
        part = sympy.diff(expr, c)
        if part.free_symbols & set(coeffs):
            raise TablesError(f"{text!r} is not linear in {c}")
        found = form_coefficients(part, degree, dim)
        vectors.append([exact_number(found.get(idx, 0)) for idx in combinations(range(dim), degree)])
    return tuple(c.name for c in coeffs), vectors


def same_zero_set(p, q) -> bool:
    """p ≠ 0 과 q ≠ 0 이 같은 조건인지 (제곱 인수 제거 후 상수배 비교)"""
    p, q = sympy.expand(p), sympy.expand(q)
    if p == 0 or q == 0:
        return p == q
    if p.is_number or q.is_number:
        return bool(p.is_number and q.is_number)
    ratio = sympy.cancel(sympy.sqf_part(p) / sympy.sqf_part(q))
    return bool(ratio.is_number and ratio != 0)
