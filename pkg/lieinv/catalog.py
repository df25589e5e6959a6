# lieinv/catalog.py

"""
4차원 가해 실 Lie 대수 목록 (16개 family)

CATALOG_CONFIG 한 곳에서 case 별로
- label / params / 범위 설명
- 괄호 관계 (params → 1-based 괄호표)
- 유도 대수 생성원 (계수가 0이 되는 생성원은 빠진다)
- 기본 검증 grid
를 관리한다.
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from lieinv.errors import ParameterOutOfRangeError, UnknownCaseError
from lieinv.lie import LieAlgebra
from lieinv.linalg import format_scalar, to_scalar

log = logging.getLogger("lieinv.catalog")

F = Fraction


def _e(n: int, coeffs: Mapping[int, Any]) -> List:
    v = [to_scalar(0)] * n
    for k, c in coeffs.items():
        v[k - 1] = to_scalar(c)
    return v


# ---------- 범위 조건 ----------

def _no_check(p) -> Optional[str]:
    return None


def _check_r3_lambda(p) -> Optional[str]:
    if not (-1 <= p["lam"] <= 1):
        return "lam must lie in [-1, 1]"
    return None


def _check_r3p_gamma(p) -> Optional[str]:
    return None if p["gamma"] >= 0 else "gamma must be >= 0"


def _check_r4_alpha_beta(p) -> Optional[str]:
    a, b = p["alpha"], p["beta"]
    if a * b == 0:
        return "alpha*beta must be nonzero"
    if not (-1 <= a <= b <= 1):
        return "need -1 <= alpha <= beta <= 1"
    return None


def _check_r4p_gamma_delta(p) -> Optional[str]:
    return None if p["delta"] > 0 else "delta must be > 0"


def _check_d4_lambda(p) -> Optional[str]:
    return None if p["lam"] >= F(1, 2) else "lam must be >= 1/2"


def _check_d4p_delta(p) -> Optional[str]:
    return None if p["delta"] >= 0 else "delta must be >= 0"


# ---------- 괄호 관계 ----------
# (i, j) → {k: 계수}, [e_i, e_j] = Σ 계수 e_k

def _br_a4(p):
    return {}


def _br_rh3(p):
    return {(1, 2): {3: 1}}


def _br_r3(p):
    return {(1, 2): {2: 1}, (1, 3): {2: 1, 3: 1}}


def _br_r3_lambda(p):
    return {(1, 2): {2: 1}, (1, 3): {3: p["lam"]}}


def _br_r3p_gamma(p):
    g = p["gamma"]
    return {(1, 2): {2: g, 3: -1}, (1, 3): {2: 1, 3: g}}


def _br_r2r2(p):
    return {(1, 2): {2: 1}, (3, 4): {4: 1}}


def _br_r2p(p):
    return {(1, 3): {3: 1}, (1, 4): {4: 1}, (2, 3): {4: 1}, (2, 4): {3: -1}}


def _br_n4(p):
    return {(4, 1): {2: 1}, (4, 2): {3: 1}}


def _br_r4(p):
    return {(4, 1): {1: 1}, (4, 2): {1: 1, 2: 1}, (4, 3): {2: 1, 3: 1}}


def _br_r4_mu(p):
    mu = p["mu"]
    return {(4, 1): {1: 1}, (4, 2): {2: mu}, (4, 3): {2: 1, 3: mu}}


def _br_r4_alpha_beta(p):
    return {(4, 1): {1: 1}, (4, 2): {2: p["alpha"]}, (4, 3): {3: p["beta"]}}


def _br_r4p_gamma_delta(p):
    g, d = p["gamma"], p["delta"]
    return {(4, 1): {1: 1}, (4, 2): {2: g, 3: -d}, (4, 3): {2: d, 3: g}}


def _br_d4(p):
    return {(1, 2): {3: 1}, (4, 1): {1: 1}, (4, 2): {2: -1}}


def _br_d4_lambda(p):
    lam = p["lam"]
    return {(1, 2): {3: 1}, (4, 3): {3: 1}, (4, 1): {1: lam}, (4, 2): {2: 1 - lam}}


def _br_d4p_delta(p):
    d = p["delta"]
    return {(1, 2): {3: 1}, (4, 1): {1: d / 2, 2: -1}, (4, 3): {3: d}, (4, 2): {1: 1, 2: d / 2}}


def _br_h4(p):
    return {(1, 2): {3: 1}, (4, 3): {3: 1}, (4, 1): {1: F(1, 2)}, (4, 2): {1: 1, 2: F(1, 2)}}


# ---------- 유도 대수 (g' 열) ----------
# 파라미터 계수가 0 이면 그 생성원은 빠진다 (⟨e2, λe3⟩ 의 λ=0 등)

def _der(*gens: Dict[int, Any]) -> Callable[[Dict[str, Any]], List[List]]:
    def build(p):
        out = []
        for g in gens:
            coeffs = {k: (c(p) if callable(c) else c) for k, c in g.items()}
            v = _e(4, coeffs)
            if any(v):
                out.append(v)
        return out
    return build


# ---------- 케이스 설정 ----------

CATALOG_CONFIG: Dict[str, Dict[str, Any]] = {
    "a4": {
        "label": "a4",
        "params": [],
        "ranges": "",
        "brackets": _br_a4,
        "check": _no_check,
        "derived": _der(),
        "derived_text": "0",
        "grid": [{}],
        "note": "abelian",
    },
    "rh3": {
        "label": "rh3",
        "params": [],
        "ranges": "",
        "brackets": _br_rh3,
        "check": _no_check,
        "derived": _der({3: 1}),
        "derived_text": "<e3>",
        "grid": [{}],
        "note": "trivial extension of the Heisenberg algebra h3",
    },
    "r3": {
        "label": "r3",
        "params": [],
        "ranges": "",
        "brackets": _br_r3,
        "check": _no_check,
        "derived": _der({3: 1}, {2: 1}),
        "derived_text": "<e3, e2>",
        "grid": [{}],
        "note": "printed as rr3 in the symplectic and cohomology tables",
    },
    "r3_lambda": {
        "label": "r3,lam",
        "params": ["lam"],
        "ranges": "lam in [-1, 1]",
        "brackets": _br_r3_lambda,
        "check": _check_r3_lambda,
        "derived": _der({2: 1}, {3: lambda p: p["lam"]}),
        "derived_text": "<e2, lam*e3>",
        "grid": [{"lam": v} for v in (F(-1), F(-2, 5), F(0), F(3, 5), F(1))],
        "note": "lam=-1: trivial extension of e(1,1)",
    },
    "r3p_gamma": {
        "label": "r'3,gamma",
        "params": ["gamma"],
        "ranges": "gamma >= 0",
        "brackets": _br_r3p_gamma,
        "check": _check_r3p_gamma,
        "derived": _der({2: 1}, {3: 1}),
        "derived_text": "<e2, e3>",
        "grid": [{"gamma": v} for v in (F(0), F(3, 5), F(1))],
        "note": "gamma=0: trivial extension of e(2)",
    },
    "r2r2": {
        "label": "r2r2",
        "params": [],
        "ranges": "",
        "brackets": _br_r2r2,
        "check": _no_check,
        "derived": _der({2: 1}, {4: 1}),
        "derived_text": "<e2, e4>",
        "grid": [{}],
        "note": "aff(R) x aff(R)",
    },
    "r2p": {
        "label": "r'2",
        "params": [],
        "ranges": "",
        "brackets": _br_r2p,
        "check": _no_check,
        "derived": _der({3: 1}, {4: 1}),
        "derived_text": "<e3, e4>",
        "grid": [{}],
        "note": "aff(C)",
    },
    "n4": {
        "label": "n4",
        "params": [],
        "ranges": "",
        "brackets": _br_n4,
        "check": _no_check,
        "derived": _der({2: 1}, {3: 1}),
        "derived_text": "<e2, e3>",
        "grid": [{}],
        "note": "",
    },
    "r4": {
        "label": "r4",
        "params": [],
        "ranges": "",
        "brackets": _br_r4,
        "check": _no_check,
        "derived": _der({1: 1}, {2: 1}, {3: 1}),
        "derived_text": "<e1, e2, e3>",
        "grid": [{}],
        "note": "",
    },
    "r4_mu": {
        "label": "r4,mu",
        "params": ["mu"],
        "ranges": "mu real",
        "brackets": _br_r4_mu,
        "check": _no_check,
        "derived": _der({1: 1}, {2: 1}, {3: lambda p: p["mu"]}),
        "derived_text": "<e1, e2, mu*e3>",
        "grid": [{"mu": v} for v in (F(-1), F(-1, 2), F(0), F(3, 5), F(1), F(2))],
        "note": "",
    },
    "r4_alpha_beta": {
        "label": "r4,alpha,beta",
        "params": ["alpha", "beta"],
        "ranges": "alpha*beta != 0, -1 <= alpha <= beta <= 1",
        "brackets": _br_r4_alpha_beta,
        "check": _check_r4_alpha_beta,
        "derived": _der({1: 1}, {2: 1}, {3: 1}),
        "derived_text": "<e1, e2, e3>",
        "grid": [
            {"alpha": F(a), "beta": F(b)}
            for a, b in (
                (-1, -1), (-1, F(1, 2)), (-1, 1), (F(-1, 2), F(1, 2)), (F(-1, 3), F(1, 3)),
                (F(-2, 3), F(1, 3)), (F(-2, 3), F(-1, 3)), (F(1, 2), F(1, 2)), (F(1, 2), 1),
                (F(-1, 2), 1), (1, 1), (F(1, 3), F(3, 5)),
            )
        ],
        "note": "",
    },
    "r4p_gamma_delta": {
        "label": "r'4,gamma,delta",
        "params": ["gamma", "delta"],
        "ranges": "gamma real, delta > 0",
        "brackets": _br_r4p_gamma_delta,
        "check": _check_r4p_gamma_delta,
        "derived": _der({1: 1}, {2: 1}, {3: 1}),
        "derived_text": "<e1, e2, e3>",
        "grid": [
            {"gamma": F(g), "delta": F(d)}
            for g, d in ((0, 1), (0, F(3, 5)), (F(-1, 2), 1), (F(3, 5), 1), (F(-2, 5), F(3, 2)))
        ],
        "note": "",
    },
    "d4": {
        "label": "d4",
        "params": [],
        "ranges": "",
        "brackets": _br_d4,
        "check": _no_check,
        "derived": _der({1: 1}, {2: 1}, {3: 1}),
        "derived_text": "<e1, e2, e3>",
        "grid": [{}],
        "note": "",
    },
    "d4_lambda": {
        "label": "d4,lam",
        "params": ["lam"],
        "ranges": "lam >= 1/2",
        "brackets": _br_d4_lambda,
        "check": _check_d4_lambda,
        "derived": _der({1: 1}, {2: 1}, {3: 1}),
        "derived_text": "<e1, e2, e3>",
        "derived_suspected": (
            lambda p: p["lam"] == 1,
            _der({1: 1}, {3: 1}),
            "[e4, e2] = (1 - lam)*e2 vanishes at lam = 1, so g' = <e1, e3>",
        ),
        "grid": [{"lam": v} for v in (F(1, 2), F(1), F(2), F(3, 5), F(5, 2))],
        "note": "",
    },
    "d4p_delta": {
        "label": "d'4,delta",
        "params": ["delta"],
        "ranges": "delta >= 0",
        "brackets": _br_d4p_delta,
        "check": _check_d4p_delta,
        "derived": _der({1: 1}, {2: 1}, {3: 1}),
        "derived_text": "<e1, e2, e3>",
        "grid": [{"delta": v} for v in (F(0), F(1), F(3, 5))],
        "note": "",
    },
    "h4": {
        "label": "h4",
        "params": [],
        "ranges": "",
        "brackets": _br_h4,
        "check": _no_check,
        "derived": _der({1: 1}, {2: 1}, {3: 1}),
        "derived_text": "<e1, e2, e3>",
        "grid": [{}],
        "note": "",
    },
}

CASE_IDS: Tuple[str, ...] = tuple(CATALOG_CONFIG)

# ---------- 표기 별칭 ----------
# 표마다 이름이 조금씩 다르게 인쇄되어 있어서 (rr3 / rt3 / r4,1 …) 여기서 한 번에 정리한다.
# 값: (case_id, 고정 파라미터)

LABEL_ALIASES: Dict[str, Tuple[str, Dict[str, Fraction]]] = {
    "rr3": ("r3", {}),
    "rr3,lam": ("r3_lambda", {}),
    "rr3,0": ("r3_lambda", {"lam": F(0)}),
    "rr3,1": ("r3_lambda", {"lam": F(1)}),
    "rr3,-1": ("r3_lambda", {"lam": F(-1)}),
    "rt3,0": ("r3_lambda", {"lam": F(0)}),
    "rr'3,gamma": ("r3p_gamma", {}),
    "rr'3,0": ("r3p_gamma", {"gamma": F(0)}),
    "rt'3,0": ("r3p_gamma", {"gamma": F(0)}),
    "r'2": ("r2p", {}),
    "r4,1": ("r4_mu", {"mu": F(1)}),
    "r4,0": ("r4_mu", {"mu": F(0)}),
    "r4,-1": ("r4_mu", {"mu": F(-1)}),
    "r4,-1/2": ("r4_mu", {"mu": F(-1, 2)}),
    "r4,-1,-1": ("r4_alpha_beta", {"alpha": F(-1), "beta": F(-1)}),
    "r4,-1,1": ("r4_alpha_beta", {"alpha": F(-1), "beta": F(1)}),
    "d4,1": ("d4_lambda", {"lam": F(1)}),
    "d4,2": ("d4_lambda", {"lam": F(2)}),
    "d4,1/2": ("d4_lambda", {"lam": F(1, 2)}),
    "d'4,0": ("d4p_delta", {"delta": F(0)}),
}

# 같은 표기가 두 대수를 가리킬 수 있는 경우 (추측하지 않고 보고만 한다)
AMBIGUOUS_LABELS: Dict[str, List[Tuple[str, Dict[str, Fraction]]]] = {
    "r4,0,0": [("r4_mu", {"mu": F(0)}), ("r3_lambda", {"lam": F(0)})],
    "r4,1": [("r4_mu", {"mu": F(1)}), ("r4_alpha_beta", {"alpha": F(1), "beta": F(1)})],
}


# ---------- 조회 / 생성 ----------

def case_config(case_id: str) -> Dict[str, Any]:
    if case_id not in CATALOG_CONFIG:
        raise UnknownCaseError(f"unknown case id: {case_id} (known: {', '.join(CASE_IDS)})")
    return CATALOG_CONFIG[case_id]


def normalize_params(case_id: str, params: Optional[Mapping[str, Any]] = None) -> Dict[str, Fraction]:
    """입력 파라미터를 Fraction 으로 바꾸고 이름/개수를 확인한다."""
    cfg = case_config(case_id)
    params = dict(params or {})
    names = cfg["params"]
    unknown = sorted(set(params) - set(names))
    if unknown:
        raise ParameterOutOfRangeError(f"{case_id}: unknown parameter(s) {', '.join(unknown)}")
    missing = [n for n in names if n not in params]
    if missing:
        raise ParameterOutOfRangeError(f"{case_id}: missing parameter(s) {', '.join(missing)}")
    out = {}
    for name in names:
        value = params[name]
        if not isinstance(value, Fraction):
            try:
                q = to_scalar(value)
            except ValueError as e:
                raise ParameterOutOfRangeError(f"{case_id}: parameter {name}: {e}") from e
            value = Fraction(int(q.numerator), int(q.denominator))
        out[name] = value
    problem = cfg["check"](out)
    if problem:
        raise ParameterOutOfRangeError(f"{case_id}: {problem} (got {format_params(out)})")
    return out


def format_params(params: Mapping[str, Any]) -> str:
    return ",".join(f"{k}={format_scalar(to_scalar(v))}" for k, v in params.items())


def catalog_build(case_id: str, params: Optional[Mapping[str, Any]] = None) -> LieAlgebra:
    """case id + 파라미터 → LieAlgebra (구조상수는 표 그대로)"""
    cfg = case_config(case_id)
    p = normalize_params(case_id, params)
    name = case_id if not p else f"{case_id}[{format_params(p)}]"
    g = LieAlgebra.from_brackets(4, cfg["brackets"](p), name=name, params=p)
    log.debug("built %s: %s", name, g.describe())
    return g


def expected_derived(case_id: str, params: Optional[Mapping[str, Any]] = None) -> List[List]:
    cfg = case_config(case_id)
    return cfg["derived"](normalize_params(case_id, params))


def suspected_derived(case_id: str, params: Optional[Mapping[str, Any]] = None) -> Optional[Tuple[List[List], str]]:
    """인쇄된 g' 열이 이 파라미터에서 맞지 않는 경우의 (대안 기저, 이유). 해당 없으면 None."""
    entry = case_config(case_id).get("derived_suspected")
    if entry is None:
        return None
    applies, build, note = entry
    p = normalize_params(case_id, params)
    return (build(p), note) if applies(p) else None


def default_grid(case_id: str) -> List[Dict[str, Fraction]]:
    return [dict(p) for p in case_config(case_id)["grid"]]


def iter_catalog(case_ids: Optional[List[str]] = None):
    """(case_id, params, LieAlgebra) 를 grid 순서대로"""
    for case_id in case_ids or CASE_IDS:
        for params in default_grid(case_id):
            yield case_id, params, catalog_build(case_id, params)


def resolve_label(label: str) -> Tuple[str, Dict[str, Fraction]]:
    """표의 인쇄 표기 → (case_id, 고정 파라미터)"""
    key = label.strip()
    if key in CATALOG_CONFIG:
        return key, {}
    if key in LABEL_ALIASES:
        case_id, fixed = LABEL_ALIASES[key]
        return case_id, dict(fixed)
    raise UnknownCaseError(f"unknown table label: {label}")
