import json

import pytest

from hyperprimes import modarith
from hyperprimes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_hyper_eval(capsys):
    code, out, _ = run(capsys, "hyper", "eval", "--n", "4", "--level", "3", "--order", "<-", "--x", "2")
    assert code == 0 and out.strip() == "256"


def test_hyper_eval_formula(capsys):
    code, out, _ = run(capsys, "hyper", "eval", "--formula", "x o2 (x o2 x)", "--bind", "x=2")
    assert code == 0 and out.strip() == "16"


def test_sieve_json_with_manifest(capsys):
    code, doc = run_json(capsys, "prime", "sieve", "--op", "x^y", "--domain", "n1", "--range", "1..28")
    assert code == 0
    res = doc["result"]
    assert len(res["primes"]) == 21 and res["units"] == [1] and res["notes"]
    m = doc["manifest"]
    assert m["command"] == "prime sieve" and m["params"]["op"] == "x^y"
    assert m["version"] and "seconds" in m["timing"] and m["bounds"]["witness_radius"] >= 28


def test_goldbach(capsys):
    code, out, _ = run(capsys, "dioph", "goldbach", "--base-op", "x^2+y^2", "--range", "4..1000")
    assert code == 0 and "failures: 0" in out


def test_violation_exit_code(capsys):
    code, doc = run_json(capsys, "dioph", "cover", "--op", "x^2+y^2", "--g-op", "z^2", "--range", "1..100")
    assert code == 1 and doc["result"]["exceptions"] == [25, 100]


def test_usage_errors(capsys):
    assert run(capsys, "prime", "sieve", "--op", "x^^y", "--range", "1..3")[0] == 2
    assert run(capsys, "prime", "sieve", "--op", "x*y")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "mod", "fermat-kxy", "--k", "5", "--a", "2", "--p", "5")[0] == 2


def test_too_large_exit_code(capsys):
    code, _, err = run(capsys, "hyper", "eval", "--n", "5", "--level", "4", "--x", "3")
    assert code == 3 and "resource limit" in err


def test_csv_output(capsys):
    code, out, _ = run(capsys, "prime", "sieve", "--op", "x*y", "--range", "1..5", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "n,verdict,witness,certification"
    assert lines[1].startswith("1,unit")


def test_output_file(capsys, tmp_path):
    path = tmp_path / "set.txt"
    code, _, _ = run(capsys, "prime", "set", "--op", "x*y", "--range", "1..20", "--out", str(path))
    assert code == 0 and path.read_text().split() == ["2", "3", "5", "7", "11", "13", "17", "19"]


def test_set_domain(capsys, tmp_path):
    path = tmp_path / "d.txt"
    path.write_text("\n".join(str(v) for v in range(0, 5)) + "\n")
    code, doc = run_json(capsys, "prime", "sieve", "--op", "x+y", "--domain", f"set:{path}", "--range", "0..4")
    assert code == 0 and doc["result"]["units"] == [0]


def strip_timing(doc):
    doc["manifest"].pop("timing")
    doc["manifest"]["params"].pop("jobs", None)
    return doc


def test_deterministic_across_jobs(capsys):
    argv = ("prime", "sieve", "--op", "x^2+y^2", "--range", "1..300")
    _, a = run_json(capsys, *argv)
    _, b = run_json(capsys, *argv, "--jobs", "3")
    assert strip_timing(a) == strip_timing(b)


@pytest.mark.parametrize("argv, expected", [
    (("hyper", "convert", "--formula", "x o2^1 x o2^0 x o2^5 y o2^4 z"), "(x o2 (x o2 x)) o2 (y o2 z)"),
    (("hyper", "distrib", "--n", "3", "--level", "3", "--x", "2", "--y", "2"), "equal"),
    (("hyper", "zero", "--range", "1..4"), "4: 1"),
    (("factor", "usual", "--n", "12"), "12 = 2^2 * 3"),
    (("factor", "exp", "--n", "72"), "72: True"),
    (("factor", "hyper3", "--n", "64"), "64: (2,2) (3,1)"),
    (("factor", "verify", "--range", "2..300"), "round-trip failures: 0"),
    (("prime", "classify", "--op", "x*y-3", "--domain", "z", "--n", "16", "--semantics", "deep:2"),
     "16: composite = f(19, f(2, 2))"),
    (("dioph", "solve", "--op", "x^2+y^2", "--g-op", "z^2", "--box", "1..5"), "3 4 | 5 = 25"),
    (("dioph", "intersect", "--op", "x^2+y^2", "--g-op", "z^2", "--range", "1..30"), "25 = f(3 4) = g(5)"),
    (("dioph", "foursquare", "--range", "1..300"), "failures: 0"),
    (("lseries", "tac", "--op", "x*y", "--cutoff", "12"), "12: ((2 o 2) o 3)"),
    (("lseries", "coeffs", "--op", "x*y", "--cutoff", "5"), "5,1"),
    (("lseries", "eval", "--op", "x*y", "--cutoff", "50"), "equal: True"),
    (("mod", "congruent", "--c", "17", "--b", "5", "--m", "12"), "congruent (d = 12)"),
    (("mod", "fold", "--op", "2*x+3*y", "--a", "2", "--p", "5"), "322"),
    (("mod", "fermat-kxy", "--k", "3", "--a", "2", "--p", "5"), "holds"),
    (("mod", "fermat-linear", "--v", "3", "--h", "1", "--k", "2", "--p", "5"), "holds (fold = 322)"),
    (("mod", "inverse-check", "--g-op", "y^x", "--ginv-op", "log(x, y)"), "inverse"),
])
def test_subcommands(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    assert expected in out


def test_verify_quick_subset(capsys):
    code, doc = run_json(capsys, "verify", "all", "--profile", "quick", "--only", "1,2,4,13")
    assert code == 0 and doc["result"]["passed"]


def test_tampered_closed_form_fails(capsys, monkeypatch):
    monkeypatch.setattr(modarith, "kxy_closed_form", lambda k, a, p: k ** p * a ** p)
    code, doc = run_json(capsys, "verify", "all", "--profile", "quick", "--only", "9")
    assert code == 1 and doc["result"]["failed"] == [9]
    assert doc["result"]["criteria"][0]["name"] == "Fermat extensions"
