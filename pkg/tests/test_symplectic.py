# tests/test_symplectic.py

import pytest
import sympy
from sympy.polys.domains import QQ

from lieinv.errors import DimensionMismatchError
from lieinv.forms import KForm
from lieinv.lie import LieAlgebra
from lieinv.symplectic import (
    closed_two_forms,
    exact_symplectic_family,
    exact_two_forms,
    gram_nondegenerate,
    is_nondegenerate,
    pfaffian,
    pfaffian_by_wedge,
    pfaffian_in_coordinates,
    symplectic_exists,
)


def e(*idx):
    return KForm.basis(4, *idx)


def test_pfaffian_formula_and_wedge_agree(rng):
    for _ in range(25):
        w = KForm.from_vector(2, 4, [QQ(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(6)])
        assert pfaffian(w) == pfaffian_by_wedge(w)
        assert is_nondegenerate(w) == gram_nondegenerate(w)


def test_standard_form():
    w = e(1, 2) + e(3, 4)
    assert pfaffian(w) == 1
    assert not is_nondegenerate(e(1, 2))


def test_pfaffian_needs_four_dimensions():
    with pytest.raises(DimensionMismatchError):
        pfaffian(KForm.basis(6, 1, 2))


@pytest.mark.parametrize("case_id", ["a4", "rh3", "n4", "r2r2", "r2p"])
def test_symplectic_yes(build, case_id):
    decision = symplectic_exists(build(case_id))
    assert decision.exists
    assert pfaffian(decision.witness) != 0


@pytest.mark.parametrize("case_id,params", [
    ("d4", {}), ("r4_mu", {"mu": 1}), ("d4p_delta", {"delta": 0}),
])
def test_symplectic_no_with_zero_quadratic(build, case_id, params):
    decision = symplectic_exists(build(case_id, **params))
    assert not decision.exists
    assert decision.family.pfaffian_is_zero()
    assert decision.family.pfaffian_poly == 0


def test_r2p_closed_family(r2p):
    family = closed_two_forms(r2p)
    assert family.dimension == 3
    assert family.same_span_as([e(1, 2).vector(), (e(1, 3) - e(2, 4)).vector(), (e(1, 4) + e(2, 3)).vector()])


def test_exact_symplectic(r2p, n4, rh3):
    assert exact_symplectic_family(r2p).exists
    assert exact_two_forms(r2p).dimension == 2
    assert not exact_symplectic_family(n4).exists
    assert not exact_symplectic_family(rh3).exists


def test_pfaffian_in_table_coordinates():
    vectors = [e(1, 2).vector(), e(3, 4).vector()]
    a, b = sympy.symbols("a12 a34")
    assert pfaffian_in_coordinates(vectors, ["a12", "a34"]) == a * b


def test_dimension_guard():
    with pytest.raises(DimensionMismatchError):
        symplectic_exists(LieAlgebra.abelian(2))
