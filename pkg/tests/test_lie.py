# tests/test_lie.py

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from lieinv.lie import (
    LieAlgebra,
    ad,
    antisymmetry_defect,
    bracket,
    derived_series,
    derived_subalgebra,
    is_automorphism,
    is_nilpotent,
    is_solvable,
    is_unimodular,
    jacobi_defect,
    rescale_basis,
)
from lieinv.linalg import unit_vector


def _e(i):
    return unit_vector(4, i - 1)


def test_from_brackets_fills_antisymmetric_pair(rh3):
    assert bracket(rh3, _e(1), _e(2)) == _e(3)
    assert bracket(rh3, _e(2), _e(1)) == [-x for x in _e(3)]
    assert antisymmetry_defect(rh3) == []


def test_jacobi_defect_on_non_lie_constants():
    # [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1 은 Jacobi 를 깬다
    g = LieAlgebra.from_brackets(3, {(1, 2): {3: 1}, (2, 3): {1: 1}, (1, 3): {1: 1}}, name="bad")
    assert jacobi_defect(g)


def test_derived_and_nilpotency(rh3, n4, r2r2):
    assert derived_subalgebra(rh3) == [_e(3)]
    assert len(derived_subalgebra(n4)) == 2
    assert is_nilpotent(rh3) and is_nilpotent(n4)
    assert not is_nilpotent(r2r2)
    assert is_solvable(r2r2)
    assert derived_series(r2r2)[-1] == []


def test_unimodular(a4, n4, r2r2, r2p):
    assert is_unimodular(a4)
    assert is_unimodular(n4)
    assert not is_unimodular(r2r2)
    assert not is_unimodular(r2p)


def test_ad_columns_are_brackets(r2p):
    m = ad(r2p, _e(2)).to_list()
    # [e2,e3] = e4, [e2,e4] = -e3
    assert [row[2] for row in m] == _e(4)
    assert [row[3] for row in m] == [-x for x in _e(3)]


def test_diagonal_automorphism_of_rh3(rh3):
    ok = DomainMatrix.diag([QQ(2), QQ(1), QQ(2), QQ(1)], QQ).to_dense()
    bad = DomainMatrix.diag([QQ(2), QQ(1), QQ(1), QQ(1)], QQ).to_dense()
    assert is_automorphism(rh3, ok)
    assert not is_automorphism(rh3, bad)


def test_rescale_basis_keeps_jacobi(build, rng):
    g = build("d4_lambda", lam="3/5")
    factors = [rng.choice([QQ(1, 2), QQ(2), QQ(-1), QQ(3)]) for _ in range(4)]
    h = rescale_basis(g, factors)
    assert jacobi_defect(h) == []
    assert len(derived_subalgebra(h)) == len(derived_subalgebra(g))
