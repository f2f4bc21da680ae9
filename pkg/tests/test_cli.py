import json

from isoform.cli import main
from isoform.veritas import golden


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sympow_matches_golden(capsys):
    code, out, _ = run(capsys, "sympow", "T", "--max", "12")
    assert code == 0 and out == golden("sympow_T.md")


def test_deterministic(capsys):
    a = run(capsys, "det", "O", "--char", "O6", "--orbit", "pt:2", "--format", "json")
    b = run(capsys, "det", "O", "--char", "O6", "--orbit", "pt:2", "--format", "json")
    assert a == b
    rec = json.loads(a[1])
    assert rec["delta"] == {"a": 6, "b": 3, "c": 1}


def test_usage_errors(capsys):
    assert run(capsys, "group", "Q9")[0] == 2
    assert run(capsys, "det", "T", "--char", "T9")[0] == 2
    assert run(capsys, "generators", "T", "--char", "T7", "--orbit", "zz")[0] == 2
    assert run(capsys, "verify", "--groups", "T", "--checks", "nothing")[0] == 2


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--groups", "D3", "--format", "json")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_other_commands(capsys):
    for argv in (["group", "O"], ["orbits", "Y", "--format", "json"], ["chartable", "D5"],
                 ["groundforms", "T", "--format", "csv"], ["generators", "D4", "--char", "psi1"],
                 ["table1"], ["kappa", "--format", "json"]):
        code, out, _ = run(capsys, *argv)
        assert code == 0 and out


def test_verify_exit_one_on_failure(capsys, monkeypatch):
    from isoform import veritas

    def broken(spec, rep):
        rep.add("structure", spec, "forced failure", False)

    monkeypatch.setitem(veritas.CHECKS, "structure", broken)
    code, out, _ = run(capsys, "verify", "--groups", "C3", "--checks", "structure")
    assert code == 1 and "FAIL" in out
