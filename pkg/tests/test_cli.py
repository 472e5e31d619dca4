import json

import pytest

from grothwitt import serial
from grothwitt.cli import main
from grothwitt.zerodim import measure_of_etale

SUPERSINGULAR = {
    "field": {"p": 2, "n": 1},
    "monomials": [{"e": [0, 2, 1], "c": 1}, {"e": [0, 1, 2], "c": 1}, {"e": [3, 0, 0], "c": 1}],
    "genus": 1,
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_witt_examples(capsys):
    assert run(capsys, "witt", "mul", "--a", "−2", "--b", "−3")[:2] == (0, "1,-6")
    assert run(capsys, "witt", "add", "--a", "-2", "--b", "-3", "--trunc", "2")[:2] == (0, "1,-5,6")
    code, out, _ = run(capsys, "witt", "ghost", "--a", "-1", "--trunc", "4")
    assert (code, out) == (0, "1,1,1,1")
    assert run(capsys, "witt", "versch", "--a", "-2", "--nu", "2", "--trunc", "3", "--json")[1] == '["0","-2","0"]'
    assert run(capsys, "witt", "frob", "--a", "[-1, 0]", "--nu", "2")[1] == "1,-1"


def test_k0s(capsys):
    assert run(capsys, "k0s", "psi", "--elem", '{"2":1}', "--n", "3")[:2] == (0, "0")
    assert run(capsys, "k0s", "psi", "--elem", '{"2":1}', "--n", "4")[1] == "2"
    assert json.loads(run(capsys, "k0s", "mul", "--a", '{"2":1}', "--b", '{"3":1}')[1]) == {"6": 1}
    payload = json.loads(run(capsys, "k0s", "zerodiv", "--nu", "3")[1])
    assert payload["product"] == {}


def test_dh_examples(capsys):
    assert run(capsys, "dh", "sigma", "--p", "3", "--a", "2", "--t", "7")[1] == "3"
    assert run(capsys, "dh", "val", "--p", "3", "--a", "2", "--t", "1")[1] == "1/2"
    out = run(capsys, "dh", "jacobi", "--p", "3", "--a", "2", "--j", "1", "--t", "1", "--bits", "128")[1]
    assert "±" in out
    th = json.loads(run(capsys, "dh", "threshold", "--p", "2", "--horizon", "50")[1])
    assert (th["T"], th["failures"]) == (3, [1, 2])
    m = json.loads(run(capsys, "dh", "matrix", "--p", "2", "--n", "3", "--gamma", "3")[1])
    assert (m["X"], m["det"]) == ([[1, 2], [2, 1]], -3)
    assert run(capsys, "dh", "matrix", "--p", "2", "--n", "3", "--gamma", "2")[0] == 2


def test_zeta_and_measure_round_trip(capsys):
    code, out, _ = run(capsys, "zeta", "compute", "--curve", json.dumps(SUPERSINGULAR))
    z = json.loads(out)
    assert code == 0 and z["numerator"] == ["0", "2"] and z["counts"] == [3, 9]
    assert run(capsys, "zeta", "count", "--curve", json.dumps(SUPERSINGULAR), "--ext", "2")[1] == "9"
    measure = run(capsys, "measure", "of", "--zeta", out)[1]
    assert measure == run(capsys, "measure", "of", "--curve", json.dumps(SUPERSINGULAR))[1]
    # Lefschetz: the ghost polynomial at T = 1 counts points
    ghosts = json.loads(run(capsys, "measure", "ghost", "--input", measure, "--nu", "2")[1])
    assert sum(int(c) for c in ghosts) == 9
    squared = run(capsys, "measure", "mul", "--a", measure, "--b", measure)[1]
    assert run(capsys, "measure", "frob", "--input", squared, "--nu", "1")[1] == squared


def test_zeta_from_counts(capsys):
    out = run(capsys, "zeta", "compute", "--counts", "3,9", "--q", "2", "--genus", "1")[1]
    assert json.loads(out)["numerator"] == ["0", "2"]
    assert run(capsys, "zeta", "compute", "--counts", "5,6", "--q", "2", "--genus", "1")[0] == 2


def test_indep(capsys, tmp_path):
    from grothwitt.acceptance import ABELIAN_SURFACES

    path = tmp_path / "chars.json"
    path.write_text(json.dumps(ABELIAN_SURFACES))
    code, out, _ = run(capsys, "indep", "jacobi", "--input", str(path), "--point", "-1,-1,1,1")
    assert code == 0 and json.loads(out)["status"] == "independent"
    dup = {"M": 1, "N": 1, "reps": [[{"t": 0, "e": [1]}], [{"t": 0, "e": [1]}]]}
    code, out, _ = run(capsys, "indep", "lattice", "--input", "@" + _write(tmp_path, dup))
    assert code == 3 and json.loads(out)["geometrically_independent"] is False
    code, out, _ = run(capsys, "indep", "two-curves", "--q", "4", "--p1", "1,4,4", "--p2", "", "--mmax", "120", "--horizon", "50")
    assert code == 0 and json.loads(out)["case"] == "BecomesSpecialBoth"


def _write(tmp_path, obj):
    p = tmp_path / "in.json"
    p.write_text(json.dumps(obj))
    return str(p)


def test_skolem(capsys):
    m = serial.dumps(serial.measure_to_json(measure_of_etale(2)))
    g = json.loads(run(capsys, "skolem", "goodset", "--input", m, "--horizon", "50")[1])
    assert (g["finite"], g["M"], g["I"]) == ([], 2, [1])
    ms = "[" + m + "]"
    code, out, _ = run(capsys, "skolem", "localize", "--measures", ms, "--factors", '["T1", "T1 - 2"]', "--horizon", "60")
    loc = json.loads(out)
    assert code == 0 and (loc["M"], loc["factor"]) == (2, "T1 - 2")
    assert run(capsys, "skolem", "localize", "--measures", ms, "--factors", '["T1 - 3"]')[0] == 2


def test_exit_codes(capsys):
    assert run(capsys, "nosuch")[0] == 2
    assert run(capsys, "witt", "mul", "--a", "x", "--b", "1")[0] == 2
    assert run(capsys, "witt", "add", "--a", "1", "--b", "1", "--trunc", "0")[0] == 2
    assert run(capsys, "zeta", "count", "--curve", json.dumps(SUPERSINGULAR), "--ext", "30", "--budget", "100")[0] == 2
    assert run(capsys, "dh", "sigma", "--p", "4", "--a", "2", "--t", "1")[0] == 2
    assert run(capsys, "verify", "--suite", "99")[0] == 2


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "6,8")
    assert code == 0
    assert out.splitlines()[-1] == "2/2 passed"


def test_determinism(capsys):
    argv = ["indep", "jacobi", "--input", json.dumps({"M": 1, "N": 2, "reps": [[{"t": 0, "e": [1, 0]}], [{"t": 0, "e": [0, 1]}]]}), "--seed", "7"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_environment_precedence(capsys, monkeypatch):
    monkeypatch.setenv("GROTHWITT_TRUNC", "3")
    assert run(capsys, "witt", "ghost", "--a", "-1")[1] == "1,1,1"
    assert run(capsys, "witt", "ghost", "--a", "-1", "--trunc", "2")[1] == "1,1"
    monkeypatch.setenv("GROTHWITT_BUDGET", "10")
    assert run(capsys, "zeta", "count", "--curve", json.dumps(SUPERSINGULAR), "--ext", "4")[0] == 2
    assert run(capsys, "zeta", "count", "--curve", json.dumps(SUPERSINGULAR), "--ext", "4", "--budget", "100")[0] == 0
    monkeypatch.setenv("GROTHWITT_SEED", "nope")
    assert run(capsys, "witt", "ghost", "--a", "-1")[0] == 2
