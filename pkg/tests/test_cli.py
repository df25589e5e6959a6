# tests/test_cli.py

import json

import pytest
from click.testing import CliRunner

from lieinv import __version__
from lieinv.main import cli


@pytest.fixture
def runner():
    return CliRunner()


def _json_lines(output):
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_catalog_lists_every_case(runner):
    result = runner.invoke(cli, ["catalog", "--json"])
    assert result.exit_code == 0
    cases = [d["case"] for d in _json_lines(result.output)]
    assert len(cases) == 16
    assert "rh3" in cases and "r2p" in cases


def test_catalog_text_and_aliases(runner):
    result = runner.invoke(cli, ["catalog", "--aliases"])
    assert result.exit_code == 0
    assert "rr3,0 -> r3_lambda [lam=0]" in result.output


def test_cohomology_text(runner):
    result = runner.invoke(cli, ["cohomology", "--case", "rh3"])
    assert result.exit_code == 0, result.output
    assert "betti = (1, 3, 4, 3, 1)" in result.output
    assert "agree: True" in result.output


def test_cohomology_json(runner):
    result = runner.invoke(cli, ["cohomology", "--case", "r2p", "--json"])
    assert result.exit_code == 0, result.output
    (data,) = _json_lines(result.output)
    assert data["betti"] == [1, 2, 1, 0, 0]
    assert data["paths_agree"] is True
    assert data["b1_from_derived"] == 2


def test_unknown_case_is_input_error(runner):
    result = runner.invoke(cli, ["cohomology", "--case", "nope"])
    assert result.exit_code == 3
    assert "error:" in result.output


def test_parameter_out_of_range(runner):
    result = runner.invoke(cli, ["symplectic", "--case", "r3_lambda", "--params", "lam=2"])
    assert result.exit_code == 3


def test_missing_algebra_is_usage_error(runner):
    result = runner.invoke(cli, ["symplectic"])
    assert result.exit_code == 2


def test_symplectic_from_file(runner, tmp_path):
    path = tmp_path / "rh3.lie"
    path.write_text("dim 4\n[1,2] = 1*3\n", encoding="utf-8")
    result = runner.invoke(cli, ["symplectic", "--file", str(path)])
    assert result.exit_code == 0, result.output
    assert "symplectic: yes" in result.output


def test_jacobi_failure_rejected(runner, tmp_path):
    path = tmp_path / "bad.lie"
    path.write_text("dim 4\n[1,2] = 1*3\n[1,3] = 1*1\n", encoding="utf-8")
    result = runner.invoke(cli, ["symplectic", "--file", str(path)])
    assert result.exit_code == 3
    assert "Jacobi" in result.output


def test_complex_single_structure_json(runner):
    result = runner.invoke(cli, ["complex", "--case", "rh3", "--j", "e1->e2, e3->e4", "--json"])
    assert result.exit_code == 0, result.output
    (data,) = _json_lines(result.output)
    assert data["integrable"] is True
    assert data["abelian"] is True
    assert data["biinvariant"] is False


def test_complex_assign_without_template(runner):
    result = runner.invoke(cli, ["complex", "--case", "rh3", "--assign", "b1=i"])
    assert result.exit_code == 2


def test_kahler_scan(runner):
    result = runner.invoke(cli, ["kahler", "--case", "r2p", "--scan", "--json"])
    assert result.exit_code == 0, result.output
    (data,) = _json_lines(result.output)
    assert data["solvable"] == [["0", "-1"]]


def test_verify_one_case_json(runner):
    result = runner.invoke(cli, ["verify", "--case", "rh3", "--json", "--no-progress"])
    assert result.exit_code == 0, result.output
    lines = _json_lines(result.output)
    assert len(lines) == 8
    assert {d["case"] for d in lines} == {"rh3"}


def test_verify_needs_a_target(runner):
    result = runner.invoke(cli, ["verify"])
    assert result.exit_code == 2


def test_invalid_setting_is_usage_error(runner, monkeypatch):
    monkeypatch.setenv("LIEINV_GRID_CAP", "lots")
    result = runner.invoke(cli, ["catalog"])
    assert result.exit_code == 2


def test_malformed_file_is_input_error(runner, tmp_path):
    path = tmp_path / "broken.lie"
    path.write_text("dim 4\n[1,2] = e3 please\n", encoding="utf-8")
    result = runner.invoke(cli, ["cohomology", "--file", str(path)])
    assert result.exit_code == 3
    assert "line 2" in result.output


_X_MATRIX = " ".join(["x"] + ["0"] * 15)


@pytest.mark.parametrize("args", [
    ["kahler", "--case", "r2p", "--j", _X_MATRIX],
    ["cohomology", "--case", "rh3", "--form", "1/0*e12"],
    ["cohomology", "--case", "r3_lambda", "--params", "lam=1/0"],
    ["symplectic", "--case", "r2p", "--form", "1*e12 + x*e34"],
])
def test_unreadable_numbers_are_input_errors(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 3, result.output
    assert "error:" in result.output
    assert "Traceback" not in result.output


def test_division_by_zero_in_file_reports_line(runner, tmp_path):
    path = tmp_path / "broken.lie"
    path.write_text("dim 4\n[1,2] = 1/0*3\n", encoding="utf-8")
    result = runner.invoke(cli, ["cohomology", "--file", str(path)])
    assert result.exit_code == 3
    assert "error:" in result.output
    assert "line 2" in result.output


def test_verify_all_has_no_mismatch(runner):
    result = runner.invoke(cli, ["verify", "--all", "--json", "--no-progress"])
    records = _json_lines(result.output)
    assert records
    assert [r for r in records if r["status"] == "MISMATCH"] == []
    assert result.exit_code == 0, result.output
