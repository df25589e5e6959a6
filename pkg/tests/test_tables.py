# tests/test_tables.py

import pytest

from lieinv.errors import TablesError
from lieinv.tables import TABLE_IDS, alt_rows_for, load_tables, rows_for, templates_for


def test_shipped_tables_load():
    tables = load_tables()
    assert tables.version == "2024.1"
    for table_id in TABLE_IDS[1:]:
        assert tables.rows(table_id)
    assert "a4" in tables.remark_3_5.biinvariant


def test_row_selection_by_parameters():
    tables = load_tables()
    rows = rows_for(tables.table_3_3, "r3_lambda", {"lam": 0})
    assert [r.label for r in rows] == ["rr3,0"]
    assert rows_for(tables.table_3_3, "r3_lambda", {"lam": "3/5"}) == []
    assert alt_rows_for(tables.table_3_3, "r3_lambda", {"lam": 0}) == []


def test_cohomology_row_classes():
    row = rows_for(load_tables().table_4_5, "rh3", {})[0]
    assert row.classes(1) == ["e1", "e2", "e4"]
    assert len(row.classes(2)) == 4


def test_templates_for_rh3():
    ids = [t.template_id for t in templates_for(load_tables(), "rh3", {})]
    assert ids == ["T1"]


def test_broken_yaml(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("version: [\n", encoding="utf-8")
    with pytest.raises(TablesError):
        load_tables(path)


def test_schema_mismatch(tmp_path):
    path = tmp_path / "schema.yaml"
    path.write_text("version: '1'\n", encoding="utf-8")
    with pytest.raises(TablesError):
        load_tables(path)


def test_unknown_case_in_row(tmp_path):
    path = tmp_path / "unknown.yaml"
    path.write_text(
        "version: '1'\n"
        "table_3_3: [{label: x, case: g99}]\n"
        "table_4_2: []\ntable_4_3: []\ntable_4_5: []\ntable_5_1: []\n"
        "remark_3_5: {abelian: [], biinvariant: []}\n",
        encoding="utf-8",
    )
    with pytest.raises(TablesError):
        load_tables(path)


def test_missing_file(tmp_path):
    with pytest.raises(TablesError):
        load_tables(tmp_path / "none.yaml")
