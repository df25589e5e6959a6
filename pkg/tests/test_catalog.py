# tests/test_catalog.py

from fractions import Fraction

import pytest

from lieinv.catalog import (
    AMBIGUOUS_LABELS,
    CASE_IDS,
    catalog_build,
    default_grid,
    expected_derived,
    iter_catalog,
    normalize_params,
    resolve_label,
    suspected_derived,
)
from lieinv.errors import ParameterOutOfRangeError, UnknownCaseError
from lieinv.lie import antisymmetry_defect, derived_subalgebra, is_solvable, jacobi_defect
from lieinv.linalg import same_span


def test_sixteen_families_and_enough_samples():
    assert len(CASE_IDS) == 16
    assert sum(len(default_grid(c)) for c in CASE_IDS) >= 40


def test_every_grid_instance_is_a_solvable_lie_algebra():
    for case_id, params, g in iter_catalog():
        assert antisymmetry_defect(g) == [], case_id
        assert jacobi_defect(g) == [], (case_id, params)
        assert is_solvable(g), case_id


def test_derived_column_matches_on_grid():
    for case_id, params, g in iter_catalog():
        computed = derived_subalgebra(g)
        alt = suspected_derived(case_id, params)
        expected = alt[0] if alt else expected_derived(case_id, params)
        assert len(computed) == len(expected), (case_id, params)
        if expected:
            assert same_span(computed, expected), (case_id, params)


def test_d4_lambda_one_loses_e2_from_derived_algebra():
    g = catalog_build("d4_lambda", {"lam": 1})
    printed = expected_derived("d4_lambda", {"lam": 1})
    alt, note = suspected_derived("d4_lambda", {"lam": 1})
    assert len(derived_subalgebra(g)) == 2
    assert not same_span(derived_subalgebra(g), printed)
    assert same_span(derived_subalgebra(g), alt)
    assert "lam = 1" in note
    assert suspected_derived("d4_lambda", {"lam": 2}) is None
    assert suspected_derived("rh3") is None


def test_r3_lambda_zero_drops_generator():
    g = catalog_build("r3_lambda", {"lam": 0})
    assert len(derived_subalgebra(g)) == 1


@pytest.mark.parametrize("case_id,params", [
    ("r3_lambda", {"lam": 2}),
    ("r3p_gamma", {"gamma": -1}),
    ("r4_alpha_beta", {"alpha": 1, "beta": Fraction(1, 2)}),
    ("r4_alpha_beta", {"alpha": 0, "beta": 1}),
    ("r4p_gamma_delta", {"gamma": 0, "delta": 0}),
    ("d4_lambda", {"lam": Fraction(1, 3)}),
    ("d4p_delta", {"delta": -1}),
])
def test_parameter_ranges(case_id, params):
    with pytest.raises(ParameterOutOfRangeError):
        normalize_params(case_id, params)


def test_missing_and_unknown_parameters():
    with pytest.raises(ParameterOutOfRangeError):
        normalize_params("r3_lambda", {})
    with pytest.raises(ParameterOutOfRangeError):
        normalize_params("a4", {"lam": 1})


def test_unreadable_parameter_value():
    with pytest.raises(ParameterOutOfRangeError):
        normalize_params("r3_lambda", {"lam": "x"})
    with pytest.raises(ParameterOutOfRangeError):
        normalize_params("r3_lambda", {"lam": "1/0"})


def test_unknown_case():
    with pytest.raises(UnknownCaseError):
        catalog_build("r5")


def test_label_aliases():
    assert resolve_label("r'2") == ("r2p", {})
    assert resolve_label("d4,2") == ("d4_lambda", {"lam": Fraction(2)})
    assert resolve_label("h4") == ("h4", {})
    with pytest.raises(UnknownCaseError):
        resolve_label("g4,7")


def test_ambiguous_labels_list_both_readings():
    readings = {case_id for case_id, _ in AMBIGUOUS_LABELS["r4,0,0"]}
    assert readings == {"r4_mu", "r3_lambda"}
