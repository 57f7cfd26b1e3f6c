import json
import os

import pytest

from gstruct.tables import (
    ComponentTable,
    emit_table,
    format_widths,
    load_cached,
    parse_widths,
    run_compute,
    table_from_dict,
    table_to_dict,
)


def test_format_widths():
    assert format_widths((2, 2, 2)) == "2^3"
    assert format_widths((1, 2)) == "1^1 2^1"
    assert format_widths((1, 1, 1, 4) + (4,) * 12 + (5,) * 7 + (7,) * 15 + (13,) * 3) == \
        "1^3 4^13 5^7 7^15 13^3"
    assert parse_widths("1^1 2^1") == (1, 2)
    assert parse_widths(format_widths((2, 3, 3, 5, 5))) == (2, 3, 3, 5, 5)


def test_run_compute_a5_rows():
    table = run_compute("A5")
    assert table.order == 60
    rows = [(r.m, r.d, r.e, r.genus_cover) for r in table.rows]
    assert rows == [(2, 10, 5, 25), (1, 18, 3, 21)]
    assert table.total_pairs == 38
    assert not table.has_undetermined()


def test_rows_sorted_by_genus_then_d():
    table = run_compute("S6", congruence="skip")
    keys = [(r.genus, r.d) for r in table.rows]
    assert keys == sorted(keys)


def test_empty_table_for_non_two_generated():
    table = run_compute("C2xC2xC2")
    assert table.rows == []
    text = emit_table(table, "md")
    assert text.count("\n") == 2  # header + separator only


def test_emit_formats():
    table = run_compute("Q8")
    md = emit_table(table, "md")
    assert "| 2^3 |" in md and "| cong |" in md and "| crse |" in md
    csv = emit_table(table, "csv")
    assert csv.splitlines()[1].split(",")[7] == "2^3"
    data = json.loads(emit_table(table, "json"))
    assert data["schema_version"] == 1
    assert data["rows"][0]["cusp_widths"] == "2^3"
    with pytest.raises(ValueError):
        emit_table(table, "html")


def test_json_roundtrip_lossless():
    table = run_compute("PSL(2,7)")
    clone = table_from_dict(json.loads(emit_table(table, "json")))
    assert emit_table(clone, "md") == emit_table(table, "md")
    assert table_to_dict(clone) == table_to_dict(table)


def test_determinism():
    assert emit_table(run_compute("A5")) == emit_table(run_compute("A5"))


def test_cache_roundtrip_and_miss(tmp_path):
    d = str(tmp_path)
    assert load_cached("A5", cache_dir=d) is None
    t1 = run_compute("A5", cache_dir=d)
    t2 = load_cached("A5", cache_dir=d)
    assert t2 is not None
    assert emit_table(t1) == emit_table(t2)


def test_cache_corrupt_entry_warns(tmp_path):
    d = str(tmp_path)
    run_compute("D8", cache_dir=d)
    (entry,) = [f for f in os.listdir(d) if f.endswith(".json")]
    with open(os.path.join(d, entry), "w") as fh:
        fh.write("{not json")
    with pytest.warns(UserWarning):
        assert load_cached("D8", cache_dir=d) is None


def test_cache_version_mismatch_is_miss(tmp_path):
    d = str(tmp_path)
    run_compute("D8", cache_dir=d)
    (entry,) = [f for f in os.listdir(d) if f.endswith(".json")]
    path = os.path.join(d, entry)
    with open(path) as fh:
        data = json.load(fh)
    data["schema_version"] = 999
    with open(path, "w") as fh:
        json.dump(data, fh)
    assert load_cached("D8", cache_dir=d) is None


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("GSTRUCT_CACHE_DIR", str(tmp_path))
    run_compute("D6")
    assert any(f.endswith(".json") for f in os.listdir(str(tmp_path)))


def test_cache_keyed_by_options(tmp_path):
    d = str(tmp_path)
    run_compute("D6", congruence="skip", cache_dir=d)
    assert load_cached("D6", congruence="both", cache_dir=d) is None
    assert load_cached("D6", congruence="skip", cache_dir=d) is not None
