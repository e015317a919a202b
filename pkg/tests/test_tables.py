from __future__ import annotations

import json

import pytest

from fibalg.engine.errors import FormatError, ParseError
from fibalg.published import (
    canonical_id,
    errata,
    get_published,
    list_tables,
    load_table_file,
    table_ids,
    table_meta,
    validate_table_data,
)
from fibalg.resource_path import TABLES_ENV, table_path, tables_dir
from fibalg.tables import build_table, diff_table, render_csv, render_diff, render_json, render_text


def test_registry_lists_every_table():
    assert [t["id"] for t in list_tables()] == ["1", "2", "3", "4", "5", "6", "7", "8"]
    assert table_ids()[-1] == "jordan"
    assert canonical_id("Jordan") == "8"
    assert table_meta(" Jordan ")["id"] == "8"
    assert table_meta("2")["aliases"] == []
    assert list_tables()[-1]["aliases"] == ["jordan"]
    with pytest.raises(ParseError):
        canonical_id("9")
    with pytest.raises(ParseError):
        table_meta("99")


@pytest.mark.parametrize("table_id", ["1", "2", "3", "4", "5", "6", "7", "8"])
def test_published_assets_validate(table_id):
    data = get_published(table_id)
    assert data["id"] == table_id
    assert len(data["cells"]) == len(data["rows"])


def test_validation_rejects_bad_tables(tmp_path):
    good = get_published("1")
    with pytest.raises(FormatError):
        validate_table_data(dict(good, kind="lattice"))
    with pytest.raises(FormatError):
        validate_table_data(dict(good, version=2))
    with pytest.raises(FormatError):
        validate_table_data(dict(good, cells=good["cells"][:-1]))
    with pytest.raises(FormatError):
        validate_table_data(dict(good, errata=[{"row": "1"}]))
    with pytest.raises(FormatError):
        load_table_file(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(FormatError):
        load_table_file(broken)


@pytest.mark.parametrize("table_id", ["1", "3", "4", "5", "6", "7", "jordan"])
def test_regenerated_tables_match(table_id):
    assert diff_table(table_id) == []


def test_quasiaddition_table_differs_only_at_errata():
    entries = diff_table("2")
    assert {(e["row"], e["col"]) for e in entries} == set(errata(get_published("2")))
    assert all(e["kind"] == "erratum" for e in entries)
    grid = build_table("2")
    assert grid.cell("2+2t", "-1-3t") == "7+10t"
    assert grid.cell("-1-2t", "2+3t") == "-6-10t"


@pytest.mark.parametrize("table_id", ["6", "7"])
def test_equation_convention_flips_central_cells(table_id):
    entries = diff_table(table_id, "equation")
    assert {(e["row"], e["col"]) for e in entries} == {("-4", "4"), ("-3", "3"), ("-2", "2")}
    assert all(e["kind"] == "central_sign" for e in entries)


def test_selected_cells():
    assert build_table("1").cell("1/2", "0") == "0"
    assert build_table("3").cell("1+t", "2+3t") == "(1+2t)L_{3+4t}"
    assert build_table("4").cell("-4", "0") == "-4L_{-4}"
    virasoro = build_table("6")
    assert virasoro.cell("-4", "4") == "5C"
    assert virasoro.cell("-3", "3") == "2C"
    assert virasoro.cell("-2", "2") == "1/2C"
    assert build_table("jordan").cell("-4", "-2") == "1/2(L_{-7}+L_{1})"


def test_renderers():
    grid = build_table("1")
    csv_lines = render_csv(grid).splitlines()
    assert csv_lines[0] == "alpha\\n,-4,-3,-2,-1,0,1,2,3,4"
    assert csv_lines[1] == "1,-2-4t,-1-3t,-1-2t,-t,1,1+t,2+2t,2+3t,3+4t"
    text = render_text(grid)
    assert text.splitlines()[0] == grid.title
    assert "2+3τ" in text
    doc = json.loads(render_json(grid))
    assert doc["rows"] == ["1", "1/2", "0"]
    assert doc["params"] == {"beta": 0}


def test_diff_rendering():
    assert render_diff([], "text") == "no differences\n"
    entries = diff_table("2")
    text = render_diff(entries, "text")
    assert "7+10τ" in text
    assert "[erratum]" in text
    assert render_diff(entries, "csv").splitlines()[0] == "row,col,published,computed,kind"
    assert len(json.loads(render_diff(entries, "json"))) == 2


def test_tables_dir_override(tmp_path, monkeypatch):
    source = table_path("table1_chains.json", environ={})
    assert source.is_file()
    assert tables_dir({TABLES_ENV: str(tmp_path)}) == tmp_path
    (tmp_path / "table1_chains.json").write_text(source.read_text(encoding="utf-8"), encoding="utf-8")
    monkeypatch.setenv(TABLES_ENV, str(tmp_path))
    assert get_published("1")["rows"] == ["1", "1/2", "0"]
    with pytest.raises(FormatError):
        get_published("2")
