# tests/test_forms.py

import pytest
from sympy.polys.domains import QQ

from lieinv.errors import DimensionMismatchError
from lieinv.forms import (
    KForm,
    basis_tuples,
    ce_differential,
    ce_differential_leibniz,
    evaluate,
    is_closed,
    one_form_differentials,
    wedge,
)
from lieinv.linalg import unit_vector


def e(*idx):
    return KForm.basis(4, *idx)


def test_basis_sign_and_format():
    assert KForm.basis(4, 2, 1) == -e(1, 2)
    assert str(e(1, 2) - e(3, 4)) == "1*e12 + -1*e34"
    assert str(KForm.zero(2, 4)) == "0"


def test_constant_form_prints_as_number():
    assert str(KForm.from_dict(0, 4, {(): QQ(1)})) == "1"
    assert str(KForm.from_dict(0, 4, {(): QQ(-3, 2)})) == "-3/2"


def test_wedge_is_graded_commutative():
    a, b = e(1), e(2)
    assert wedge(a, b) == -wedge(b, a)
    w = e(1, 2) + e(3, 4)
    assert wedge(w, w) == KForm.volume(4).scale(2)


def test_evaluate_two_form():
    w = e(1, 2)
    assert evaluate(w, unit_vector(4, 0), unit_vector(4, 1)) == QQ(1)
    assert evaluate(w, unit_vector(4, 1), unit_vector(4, 0)) == QQ(-1)
    with pytest.raises(DimensionMismatchError):
        evaluate(w, unit_vector(4, 0))


def test_one_form_differentials_rh3(rh3):
    # de^k = -Σ c^k_ij e^ij, [e1,e2] = e3
    d = one_form_differentials(rh3)
    assert d[2] == -e(1, 2)
    assert all(d[k].is_zero() for k in (0, 1, 3))


def test_r2p_worked_differentials(r2p):
    assert ce_differential(r2p, e(1, 3)) == -KForm.basis(4, 1, 2, 4)
    assert ce_differential(r2p, e(1, 4)) == KForm.basis(4, 1, 2, 3)
    assert ce_differential(r2p, e(3, 4)) == KForm.basis(4, 1, 3, 4).scale(-2)
    assert is_closed(r2p, e(1, 3) - e(2, 4))
    assert is_closed(r2p, e(1, 4) + e(2, 3))


@pytest.mark.parametrize("case_id,params", [
    ("rh3", {}), ("n4", {}), ("r2p", {}), ("d4_lambda", {"lam": "3/5"}), ("h4", {}),
])
def test_d_squared_and_leibniz_agree(build, case_id, params):
    g = build(case_id, **params)
    for k in range(4):
        for idx in basis_tuples(4, k):
            w = KForm.from_dict(k, 4, {idx: 1})
            dw = ce_differential(g, w)
            assert dw == ce_differential_leibniz(g, w)
            assert ce_differential(g, dw).is_zero()


def test_from_dict_rejects_wrong_degree():
    with pytest.raises(DimensionMismatchError):
        KForm.from_dict(2, 4, {(0, 1, 2): 1})
