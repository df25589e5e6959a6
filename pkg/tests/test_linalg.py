# tests/test_linalg.py

from fractions import Fraction

import pytest
from sympy.polys.domains import QQ, QQ_I

from lieinv.linalg import (
    congruence_diagonalize,
    coordinates,
    equal,
    format_gaussian,
    format_scalar,
    in_span,
    inertia,
    matrix,
    nullspace,
    rank,
    row_basis,
    same_span,
    solve,
    to_gaussian,
    to_scalar,
    vec_conj,
)


def test_to_scalar_accepts_text_fraction_and_int():
    assert to_scalar("3/5") == QQ(3, 5)
    assert to_scalar(Fraction(-1, 2)) == QQ(-1, 2)
    assert to_scalar(7) == QQ(7)


def test_to_scalar_rejects_irrational():
    with pytest.raises(ValueError):
        to_scalar("sqrt(2)")


@pytest.mark.parametrize("value", ["x", "1/0", "", True])
def test_to_scalar_rejects_unreadable_text(value):
    with pytest.raises(ValueError):
        to_scalar(value)


def test_to_gaussian_rejects_division_by_zero():
    with pytest.raises(ValueError):
        to_gaussian("1/0 + i")


def test_vec_conj_flips_imaginary_parts():
    v = [QQ_I(1, 2), QQ_I(0, -1), QQ_I(3, 0)]
    assert vec_conj(v) == [QQ_I(1, -2), QQ_I(0, 1), QQ_I(3, 0)]
    assert vec_conj(vec_conj(v)) == v


def test_to_gaussian_and_format():
    z = to_gaussian("1/2 + 1/2*i")
    assert z == QQ_I(QQ(1, 2), QQ(1, 2))
    assert format_gaussian(z) == "1/2+1/2*i"
    assert format_gaussian(to_gaussian("-i")) == "-i"
    assert format_scalar(QQ(-3, 5)) == "-3/5"


def test_rank_and_nullspace_are_exact():
    M = matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(M) == 2
    basis = nullspace(M)
    assert len(basis) == 1
    v = basis[0]
    for row in M.to_list():
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve_returns_none_when_inconsistent():
    M = matrix([[1, 1], [2, 2]])
    assert solve(M, [QQ(1), QQ(3)]) is None
    x = solve(M, [QQ(1), QQ(2)])
    assert x[0] + x[1] == 1


def test_span_helpers():
    a = [[QQ(1), QQ(0), QQ(0)], [QQ(0), QQ(1), QQ(0)]]
    b = [[QQ(1), QQ(1), QQ(0)], [QQ(1), QQ(-1), QQ(0)]]
    assert same_span(a, b)
    assert not same_span(a, [[QQ(0), QQ(0), QQ(1)]])
    assert in_span(a, [QQ(2), QQ(3), QQ(0)])
    assert coordinates(a, [QQ(2), QQ(3), QQ(0)]) == [QQ(2), QQ(3)]
    assert row_basis(b, 3) == a


def test_gaussian_span_over_qq_i():
    u = [QQ_I(1, 0), QQ_I(0, 1)]
    assert in_span([u], [QQ_I(0, 1), QQ_I(-1, 0)])      # i * u
    assert not in_span([u], [QQ_I(1, 0), QQ_I(0, -1)])  # conjugate


def test_congruence_diagonalize_keeps_inertia():
    B = matrix([[0, 1], [1, 0]])                         # hyperbolic plane
    diagonal, P = congruence_diagonalize(B)
    assert inertia(diagonal) == (1, 1, 0)
    D = P.transpose() * B * P
    assert equal(D, matrix([[diagonal[0], 0], [0, diagonal[1]]]))


def test_congruence_diagonalize_rejects_asymmetric():
    with pytest.raises(ValueError):
        congruence_diagonalize(matrix([[1, 2], [0, 1]]))
