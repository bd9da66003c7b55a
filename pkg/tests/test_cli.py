import json

import pytest

from hbraid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_worked_examples(capsys):
    assert run(capsys, "check", "presentation", "-g", "1", "-n", "2")[:2] == (0, "all 1 relation instances hold")
    code, out, _ = run(capsys, "pure", "comb", "-m", "3", "--mode", "vertical", "a1.2 a1.3")
    assert code == 0 and out.splitlines() == ["u3 = a2.3^-1 a1.3 a2.3", "u2 = a1.2"]
    assert run(capsys, "wreath", "nf", "-g", "1", "-n", "2", "t1 s2 t1 s2^-1")[:2] == (0, "h1=b1.2 h2=b1.3 perm=id")


def test_braid_commands(capsys):
    assert run(capsys, "braid", "eq", "-m", "3", "s1 s2 s1", "s2 s1 s2")[:2] == (0, "equal")
    assert run(capsys, "braid", "eq", "-m", "3", "s1 s2", "s2 s1")[:2] == (1, "unequal")
    code, out, _ = run(capsys, "braid", "perm", "-m", "3", "s1 s2", "--format", "json")
    assert code == 0 and json.loads(out)["images"] == [2, 3, 1]


def test_hb_commands(capsys):
    assert run(capsys, "hb", "embed", "-g", "1", "-n", "2", "t1")[1] == "s1 s1"
    assert run(capsys, "hb", "phi", "-g", "1", "-n", "2", "t1 s2")[1] == "s2"
    assert run(capsys, "hb", "psi", "-g", "1", "-n", "3", "s2")[1] == "(1 2)"
    code, out, _ = run(capsys, "hb", "rdecomp", "-g", "1", "-n", "2", "s2 t1 s2^-1", "--format", "json")
    assert code == 0 and json.loads(out)["rows"] == {"vbar1": "a1.3"}
    assert run(capsys, "hb", "rdecomp", "-g", "1", "-n", "2", "t1 s2")[0] == 1


def test_check_rules(capsys):
    code, out, _ = run(capsys, "check", "rules", "-m", "4")
    assert code == 0 and out.startswith("all ")


def test_hecke_reduce(capsys):
    assert run(capsys, "hecke", "reduce", "-g", "2", "-n", "2", "s3 s3")[:2] == (0, "q*[] + (q - 1)*[s3]")
    code, out, _ = run(capsys, "hecke", "reduce", "-g", "1", "-n", "2", "(q-1)*[s2] + q*[]", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "reduced"
    code, out, _ = run(capsys, "hecke", "reduce", "-g", "1", "-n", "2", "--engine", "rewrite", "--budget", "40",
                       "a1.3 a1.2 a1.2")
    assert code == 3 and out.startswith("budget exhausted")


def test_hecke_probe_json(capsys):
    code, out, _ = run(capsys, "hecke", "probe", "-g", "1", "-n", "2", "--max-len", "3")
    rep = json.loads(out)
    assert code == 0 and rep["total"] == rep["reduced"] and rep["q1_mismatches"] == 0


def test_usage_errors(capsys):
    assert run(capsys, "braid", "eq", "-m", "3", "s1 s9", "s1")[0] == 2
    assert "position 3" in run(capsys, "braid", "perm", "-m", "3", "s1 x")[2]
    assert run(capsys, "hb", "phi", "-g", "1", "-n", "0", "1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["braid"])
    assert exc.value.code == 2


def test_help_mentions_conventions(capsys):
    with pytest.raises(SystemExit):
        main(["hecke", "reduce", "--help"])
    assert "t'<i>.<j>" in capsys.readouterr().out
