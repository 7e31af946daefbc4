"""CLI surface: schemas, exit codes, text/json agreement."""

import json

import pytest

from ypoles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_poles_json_example(capsys):
    code, out = run(capsys, "poles", "--type", "A", "--rank", "3", "--i", "1", "--j", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"sigma": [["0", 1, 2]]}


def test_text_and_json_agree(capsys):
    code, jout = run(capsys, "poles", "--type", "B", "--rank", "2", "--i", "2", "--j", "2", "--json")
    assert code == 0
    points = json.loads(jout)["sigma"]
    code, tout = run(capsys, "poles", "--type", "B", "--rank", "2", "--i", "2", "--j", "2")
    for orbit, num, den in points:
        frag = f"{orbit}:{num}" if den == 1 else f"{orbit}:{num}/{den}"
        assert frag in tout


def test_cartan_roundtrip(capsys):
    code, out = run(capsys, "cartan", "--type", "F", "--rank", "4", "--json")
    blob = json.loads(out)
    assert code == 0
    assert blob["two_kappa"] == 18 and blob["d"] == [2, 2, 1, 1]


def test_qcartan_json(capsys):
    code, out = run(capsys, "qcartan", "--type", "A", "--rank", "1", "--json")
    blob = json.loads(out)
    assert blob["C"] == [[[[0, 1, 1]]]]
    assert blob["v"]["1,1"] == [0, 1, 0, -1, 0]


def test_baxter_modes(capsys, tmp_path):
    code, out = run(capsys, "baxter", "--type", "A", "--rank", "2", "--i", "1", "--j", "2", "--json")
    assert code == 0 and json.loads(out) == {"roots": [["0", 1, 2, 1]]}
    tup = tmp_path / "p.json"
    tup.write_text(json.dumps({"2": [["0", 0, 1, 1]]}))
    code, out = run(capsys, "baxter", "--type", "A", "--rank", "2", "--i", "1",
                    "--drinfeld", str(tup), "--json")
    assert code == 0 and json.loads(out) == {"roots": [["0", 1, 2, 1]]}
    code, _ = run(capsys, "baxter", "--type", "A", "--rank", "2", "--i", "1")
    assert code == 2  # neither --j nor --drinfeld


def test_criteria_exit_codes(capsys, tmp_path):
    p = tmp_path / "p.json"
    q = tmp_path / "q.json"
    p.write_text(json.dumps({"2": [["0", 0, 1, 1]]}))
    q.write_text(json.dumps({"1": [["0", 3, 2, 1]]}))
    code, out = run(capsys, "cyclic", "--type", "A", "--rank", "2", "--P", str(p), "--Q", str(q))
    assert code == 3 and "inconclusive" in out
    q.write_text(json.dumps({"1": [["0", 1, 1, 1]]}))
    code, out = run(capsys, "cyclic", "--type", "A", "--rank", "2", "--P", str(p), "--Q", str(q))
    assert code == 0 and "certified-highest-weight" in out
    code, out = run(capsys, "irreducible", "--type", "A", "--rank", "2", "--P", str(p), "--Q", str(q))
    assert code == 0 and "certified-irreducible" in out
    p.write_text(json.dumps({"1": [["0", -1, 2, 1]]}))
    code, out = run(capsys, "double-admissible", "--type", "A", "--rank", "2", "--P", str(p))
    assert code == 3 and "not-admissible" in out


def test_sigma_subcommand(capsys, tmp_path):
    tup = tmp_path / "t.json"
    tup.write_text(json.dumps({"1": [["0", 0, 1, 1]]}))
    code, out = run(capsys, "sigma", "--type", "A", "--rank", "2", "--drinfeld", str(tup),
                    "--node", "2", "--json")
    assert code == 0 and json.loads(out) == {"sigma": [["0", 1, 2]]}
    code, out = run(capsys, "sigma", "--type", "A", "--rank", "2", "--drinfeld", str(tup), "--json")
    assert json.loads(out) == {"sigma": [["0", 0, 1], ["0", 1, 2]]}


def test_slnrep_build(capsys):
    code, out = run(capsys, "slnrep", "build", "--n", "3", "--m", "1", "--a", "1/2",
                    "--verify", "2", "--chain", "--poles", "1", "--json")
    blob = json.loads(out)
    assert code == 0
    assert blob["dim"] == 3 and blob["violations"] == []
    assert blob["poles"] == {"node": 1, "orders": [["0", 1, 2, 1]]}
    assert blob["chain"][0] == [1, ["0", 1, 2], 0]


def test_sl2_build(capsys):
    code, out = run(capsys, "sl2", "build", "--r", "2", "--a", "0", "--chain", "--json")
    blob = json.loads(out)
    assert code == 0 and blob["dim"] == 3
    assert [step[0] for step in blob["chain"]] == [1, 1]


def test_coxeter_verify(capsys):
    code, out = run(capsys, "coxeter", "verify", "--type", "D", "--rank", "4", "--json")
    assert code == 0 and json.loads(out) == {"verified": True}
    code, _ = run(capsys, "coxeter", "verify", "--type", "C", "--rank", "3")
    assert code == 2


def test_selftest_dispatch(capsys, monkeypatch):
    # the real suite runs in tests/test_acceptance.py; here only the wiring
    import ypoles.cli as cli

    monkeypatch.setattr(cli, "run_all", lambda verbose: True)
    assert main(["selftest"]) == 0
    monkeypatch.setattr(cli, "run_all", lambda verbose: False)
    assert main(["selftest"]) == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["poles", "--type", "Z", "--rank", "1", "--i", "1", "--j", "1"])
    assert exc.value.code == 2
    code, _ = run(capsys, "cartan", "--type", "D", "--rank", "3")
    assert code == 2
    code, _ = run(capsys, "poles", "--type", "A", "--rank", "2", "--i", "5", "--j", "1")
    assert code == 2
