# tests/test_cohomology.py

import pytest

from lieinv.catalog import iter_catalog
from lieinv.cohomology import (
    b1_from_derived,
    check_representatives,
    cohomology,
    compare_paths,
    complex_of,
    is_exact,
    summarize,
)
from lieinv.errors import FormNotClosedError
from lieinv.forms import KForm
from lieinv.linalg import is_zero_matrix


def e(*idx):
    return KForm.basis(4, *idx)


@pytest.mark.parametrize("case_id,betti", [
    ("a4", (1, 4, 6, 4, 1)),
    ("rh3", (1, 3, 4, 3, 1)),
    ("n4", (1, 2, 2, 2, 1)),
    ("r2r2", (1, 2, 1, 0, 0)),
    ("r2p", (1, 2, 1, 0, 0)),
])
def test_betti_numbers(build, case_id, betti):
    assert cohomology(build(case_id)).betti == betti


def test_sanity_on_every_grid_instance():
    for case_id, params, g in iter_catalog():
        report = cohomology(g)
        assert report.betti[0] == 1, case_id
        assert report.euler_characteristic() == 0, (case_id, params)
        assert report.betti[1] == b1_from_derived(g), case_id
        assert (report.betti[4] == 1) == report.unimodular, case_id


@pytest.mark.parametrize("case_id", ["rh3", "n4", "r2p", "h4", "d4"])
def test_two_paths_agree(build, case_id):
    pointwise, leibniz, same = compare_paths(build(case_id))
    assert same
    assert pointwise.betti == leibniz.betti


def test_d_squared_is_zero(r2p):
    cx = complex_of(r2p)
    for k in range(3):
        assert is_zero_matrix(cx.d(k + 1) * cx.d(k))


def test_representatives_of_rh3(rh3):
    report = cohomology(rh3)
    cx = complex_of(rh3)
    for k in range(5):
        check = check_representatives(cx, k, report.representatives(k))
        assert check.ok, k


def test_table_style_representatives_r2p(r2p):
    cx = complex_of(r2p)
    assert check_representatives(cx, 1, [e(1), e(2)]).ok
    assert check_representatives(cx, 2, [e(1, 2)]).ok
    # e13 은 닫혀 있지 않다
    assert not check_representatives(cx, 2, [e(1, 3)]).ok


def test_is_exact(r2p):
    exact = is_exact(r2p, e(1, 3) - e(2, 4))
    assert exact.exact
    assert exact.primitive is not None
    not_exact = is_exact(r2p, e(1, 2))
    assert not not_exact.exact
    assert any(not_exact.class_coordinates)
    with pytest.raises(FormNotClosedError):
        is_exact(r2p, e(1, 3))


def test_summarize_is_plain_data(rh3):
    data = summarize(cohomology(rh3))
    assert data["betti"] == [1, 3, 4, 3, 1]
    assert data["euler"] == 0
    assert data["unimodular"] is True
    assert all(isinstance(s, str) for reps in data["representatives"].values() for s in reps)
    assert len(data["representatives"][0]) == 1
    assert "e" not in data["representatives"][0][0]
