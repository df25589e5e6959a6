# tests/test_complex_structures.py

import pytest
from sympy.polys.domains import QQ_I

from lieinv.complex_structures import (
    AlmostComplexStructure,
    ComplexSubalgebra,
    GeneralFormInstance,
    grid_search_subalgebras,
    grid_values,
    integrable_by_eigenspace,
    is_abelian_structure,
    is_biinvariant,
    is_integrable,
    is_subalgebra,
    j_from_subalgebra,
    nijenhuis_defects,
    random_complex_structure,
    subalgebra_from_j,
    verify_general_form,
)
from lieinv.errors import NotAlmostComplexError, NotDirectSumError, NotIntegrableError, UnknownTemplateError
from lieinv.linalg import equal, matrix
from lieinv.parsing import parse_j
from lieinv.tables import load_tables, templates_for

I = QQ_I(0, 1)
ONE = QQ_I(1, 0)
ZERO = QQ_I(0, 0)


def J_of(text):
    return AlmostComplexStructure(parse_j(text))


def test_rejects_non_complex_matrix():
    with pytest.raises(NotAlmostComplexError):
        AlmostComplexStructure(matrix([[1, 0], [0, 1]]))


def test_abelian_structure_on_rh3(rh3):
    J = J_of("e1->e2, e3->e4")
    assert is_abelian_structure(rh3, J)
    assert is_integrable(rh3, J)
    assert not is_biinvariant(rh3, J)


def test_n4_has_no_integrable_j(n4):
    J = J_of("e1->e2, e3->e4")
    assert nijenhuis_defects(n4, J)
    with pytest.raises(NotIntegrableError) as info:
        subalgebra_from_j(n4, J)
    assert info.value.failing_bracket is not None


def test_biinvariant_structure_on_r2p(r2p):
    U, V = [ONE, I, ZERO, ZERO], [ZERO, ZERO, ONE, I]
    cert = is_subalgebra(r2p, U, V)
    assert cert.closed
    q = ComplexSubalgebra.of(U, V)
    J = j_from_subalgebra(q)
    assert equal(J.matrix, parse_j("e1->e2, e3->e4"))
    assert is_biinvariant(r2p, J)
    assert subalgebra_from_j(r2p, J).same_space(q)


def test_conjugate_subalgebra_and_match_on_sigma_q(r2p):
    q = ComplexSubalgebra.of([ONE, I, ZERO, ZERO], [ZERO, ZERO, ONE, I])
    qbar = q.conjugate()
    assert qbar.same_space(ComplexSubalgebra.of([ONE, -I, ZERO, ZERO], [ZERO, ZERO, ONE, -I]))
    assert qbar.conjugate().same_space(q)
    assert not qbar.same_space(q)
    assert is_integrable(r2p, j_from_subalgebra(qbar))


def test_j_from_subalgebra_needs_direct_sum():
    q = ComplexSubalgebra.of([ONE, ZERO, ZERO, ZERO], [ZERO, ONE, ZERO, ZERO])
    with pytest.raises(NotDirectSumError):
        j_from_subalgebra(q)


def test_integrability_paths_agree_on_random_j(build, rng):
    for case_id, params in (("rh3", {}), ("d4_lambda", {"lam": "3/5"}), ("r2p", {})):
        g = build(case_id, **params)
        for _ in range(40):
            J = random_complex_structure(rng)
            assert is_integrable(g, J) == integrable_by_eigenspace(g, J)


@pytest.mark.parametrize("case_id,params", [
    ("n4", {}), ("r3", {}), ("r3_lambda", {"lam": "3/5"}), ("r3_lambda", {"lam": "-2/5"}),
])
def test_grid_search_empty_where_table_omits(build, case_id, params):
    result = grid_search_subalgebras(build(case_id, **params), grid_values("small"))
    assert result.hits == ()
    assert result.enumerated == 806
    assert not result.truncated


@pytest.mark.parametrize("case_id,params", [
    ("n4", {}), ("r3", {}), ("r3_lambda", {"lam": "3/5"}), ("r3_lambda", {"lam": "-2/5"}),
])
def test_default_grid_also_empty_where_table_omits(build, case_id, params):
    result = grid_search_subalgebras(build(case_id, **params), grid_values("default"))
    assert result.hits == ()
    # 7 값 grid: 7**4 + 7**3 + 2*7**2 + 7 + 1
    assert result.enumerated == 2850
    assert not result.truncated


def test_grid_search_finds_r2p_subalgebra(r2p):
    result = grid_search_subalgebras(r2p, grid_values("small"))
    q = ComplexSubalgebra.of([ONE, I, ZERO, ZERO], [ZERO, ZERO, ONE, I])
    assert any(hit.same_space(q) for hit in result.hits)
    for hit in result.hits:
        assert is_integrable(r2p, j_from_subalgebra(hit))


def test_grid_search_cap(r2p):
    result = grid_search_subalgebras(r2p, grid_values("small"), cap=10)
    assert result.truncated
    assert result.enumerated == 10


def test_general_form_instances_rh3(rh3):
    templates = templates_for(load_tables(), "rh3", {})
    good = verify_general_form(rh3, GeneralFormInstance("rh3", "T1", {}, {"b1": "i", "d2": "i"}), templates)
    assert good.valid
    bad = verify_general_form(rh3, GeneralFormInstance("rh3", "T1", {}, {"b1": 1, "d2": "i"}), templates)
    assert not bad.constraint_ok
    assert not bad.valid
    with pytest.raises(UnknownTemplateError):
        verify_general_form(rh3, GeneralFormInstance("rh3", "T1", {}, {"z9": 1}), templates)
    with pytest.raises(UnknownTemplateError):
        verify_general_form(rh3, GeneralFormInstance("rh3", "T9", {}, {}), templates)


def test_unknown_grid_name():
    with pytest.raises(KeyError):
        grid_values("huge")
