import json

import pytest

from isoform.veritas import emit_table, golden, run_verifications


def test_filter_runs_only_selected_checks():
    rep = run_verifications(["O"], ["det-theorem"])
    assert rep.records
    assert {r.check for r in rep.records} <= {"det-theorem", "generator-count"}
    assert rep.ok


def test_unknown_check():
    with pytest.raises(ValueError):
        run_verifications(["T"], ["nope"])


def test_small_groups_pass():
    rep = run_verifications(["C3", "C6", "D3", "D4"])
    bad = [r for r in rep.records if not r.ok]
    assert not bad, bad


def test_golden_files_match():
    assert emit_table("sympow", group="T", max_h=12) == golden("sympow_T.md")
    assert emit_table("kappa") == golden("kappa.md")


def test_formats():
    data = json.loads(emit_table("table1", groups=["T", "O"], fmt="json"))
    assert data[0]["|G|"] == "12" and data[1]["exponent"] == "12"
    csv_text = emit_table("sympow", group="T", max_h=2, fmt="csv")
    assert csv_text.splitlines()[0] == "h,S^h,U (x) S^h"
    with pytest.raises(ValueError):
        emit_table("bogus")
    with pytest.raises(ValueError):
        emit_table("kappa", fmt="xml")


def test_chartable_json_has_exact_and_numeric():
    data = json.loads(emit_table("chartable", group="T", fmt="json"))
    t7 = next(r for r in data if r["label"] == "T7")
    assert t7["degree"] == 3
    one = t7["values"]["1"]
    assert one["numeric"] == [3.0, 0.0]


def test_dihedral_kappa_instances():
    text = emit_table("kappa", groups=["D3", "D4", "D5", "D6"], fmt="csv")
    rows = [l.split(",") for l in text.splitlines()[1:]]
    psi = [r for r in rows if r[1].startswith("psi")]
    assert all(r[3] == "1 1/2 1/2" for r in psi)
    assert {r[4] for r in psi if r[0] == "D5"} == {"5 1 1"}
