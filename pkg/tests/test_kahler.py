# tests/test_kahler.py

import pytest
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from lieinv.complex_structures import AlmostComplexStructure
from lieinv.errors import AsymmetricMetricError, NotAutomorphismError, ParameterOutOfRangeError
from lieinv.forms import KForm
from lieinv.kahler import (
    KahlerStatus,
    compatibility_transport_check,
    compatible_family,
    conjugate_structure,
    diagonal_automorphisms,
    is_compatible,
    jmunu,
    kahler_exists,
    metric_from,
    metric_is_j_invariant,
    scan_kahler_family,
    solvable_points,
)
from lieinv.linalg import format_scalar
from lieinv.parsing import parse_j


def e(*idx):
    return KForm.basis(4, *idx)


def J_of(text):
    return AlmostComplexStructure(parse_j(text))


def test_flat_kahler_on_a4(a4):
    J = J_of("e1->e2, e3->e4")
    assert is_compatible(e(1, 2) + e(3, 4), J)
    decision = kahler_exists(a4, J)
    assert decision.status is KahlerStatus.KAHLER
    assert decision.compatible.dimension == 4
    assert metric_is_j_invariant(decision.metric, J)
    phi = decision.metric.phi.to_list()
    assert all(phi[i][j] == phi[j][i] for i in range(4) for j in range(4))


def test_metric_signature_standard(a4):
    metric = metric_from(e(1, 2) + e(3, 4), J_of("e1->e2, e3->e4"))
    assert metric.signature == (4, 0, 0)
    metric = metric_from(e(1, 2) - e(3, 4), J_of("e1->e2, e3->e4"))
    assert metric.signature == (2, 2, 0)


def test_metric_needs_compatible_form():
    with pytest.raises(AsymmetricMetricError):
        metric_from(e(1, 3), J_of("e1->e2, e3->e4"))


def test_r2p_family_members(r2p):
    # J_{0,-1}: 닫힌 2-형식 세 개 모두 호환
    good = kahler_exists(r2p, jmunu(0, -1))
    assert good.status is KahlerStatus.KAHLER
    assert good.compatible.dimension == 3
    # J_{0,1} (쌍불변 J) 는 e12 만 남아 Pf ≡ 0
    bad = kahler_exists(r2p, jmunu(0, 1))
    assert bad.status is KahlerStatus.NONE
    assert bad.compatible.dimension == 1
    assert bad.compatible.family.pfaffian_is_zero()


def test_jmunu_scan_only_at_zero_minus_one(r2p):
    points = scan_kahler_family(r2p)
    assert [(format_scalar(m), format_scalar(n)) for m, n in solvable_points(points)] == [("0", "-1")]


def test_jmunu_needs_nonzero_nu():
    with pytest.raises(ParameterOutOfRangeError):
        jmunu(1, 0)


def test_non_integrable_j_gives_almost_kahler_or_none(n4):
    decision = kahler_exists(n4, J_of("e1->e2, e3->e4"))
    assert not decision.compatible.integrable
    assert decision.status is not KahlerStatus.KAHLER


def test_compatible_family_is_closed(r2p):
    compat = compatible_family(r2p, jmunu(0, -1))
    assert compat.integrable
    assert compat.family.same_span_as(
        [e(1, 2).vector(), (e(1, 3) - e(2, 4)).vector(), (e(1, 4) + e(2, 3)).vector()]
    )


def test_transport_along_diagonal_automorphism(rh3):
    J = J_of("e1->e2, e3->e4")
    w = e(1, 4) - e(2, 3)
    autos = diagonal_automorphisms(rh3)
    assert autos
    x = DomainMatrix.diag([QQ(2), QQ(1), QQ(2), QQ(1)], QQ).to_dense()
    J2 = conjugate_structure(J, x)
    check = compatibility_transport_check(rh3, J, J2, x, w)
    assert check.ok


def test_transport_rejects_non_automorphism(rh3):
    J = J_of("e1->e2, e3->e4")
    x = DomainMatrix.diag([QQ(2), QQ(1), QQ(1), QQ(1)], QQ).to_dense()
    with pytest.raises(NotAutomorphismError):
        compatibility_transport_check(rh3, J, conjugate_structure(J, x), x, e(1, 4) - e(2, 3))
