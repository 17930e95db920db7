import json
import subprocess
import sys

import pytest

from hhw.cli import main
from hhw.formats import fixture_path


def fx(name):
    return str(fixture_path(name + ".json"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def test_validate_exit_codes(capsys, tmp_path):
    assert run(capsys, "validate", fx("dual_numbers"))[0] == 0
    code, rep, _ = run_json(capsys, "validate", fx("noncommutative"))
    assert code == 1
    assert rep["checks"][0]["status"] == "fail"
    assert any("(0,1)" in w for w in rep["checks"][0]["witness"])
    bad = tmp_path / "t.json"
    bad.write_text(open(fx("dual_numbers")).read()[:60])
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 2 and "line" in err and "column" in err
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 2


def test_bad_arguments_exit_2(capsys):
    assert run(capsys, "verify", "nosuchsuite")[0] == 2
    assert run(capsys, "verify", "mc", "--trials", "0")[0] == 2
    assert run(capsys, "cohomology", fx("rationals"), "--max-degree", "0")[0] == 2


def test_cohomology_values(capsys):
    code, rep, _ = run_json(capsys, "cohomology", fx("etale_2"), "--max-degree", "3", "--hodge")
    assert code == 0
    assert rep["H"] == [2, 0, 0, 0]
    assert all(e["dim"] == 0 for e in rep["Hpq"] if e["q"] > 0)
    assert rep["total"]["dims_even"] == 2 and rep["total"]["dims_odd"] == 0
    assert rep["smooth_collapse"]["status"] == "pass"
    code, rep, _ = run_json(capsys, "cohomology", fx("rationals"), "--max-degree", "4")
    assert rep["H"] == [1, 0, 0, 0, 0]
    code, rep, _ = run_json(capsys, "cohomology", fx("dual_numbers"), "--max-degree", "3")
    assert rep["H"] == [2, 1, 1, 1]


def test_resource_bound_exit_3(capsys):
    code, out, err = run(capsys, "cohomology", fx("etale_3"), "--max-degree", "4",
                         "--bound", "500")
    assert code == 3
    assert "(m, n) = (3, 5)" in err


def test_verify_deterministic(capsys):
    args = ("verify", "mc", fx("dual_numbers"), "--trials", "20", "--seed", "5",
            "--format", "json", "--no-timing")
    a = run(capsys, *args)
    b = run(capsys, *args)
    assert a[0] == 0 and a[1] == b[1]
    rep = json.loads(a[1])
    assert rep["seed"] == 5 and rep["command"] == list(args)
    assert "timing" not in rep


def test_timing_is_separate(capsys):
    code, rep, _ = run_json(capsys, "verify", "bracket", fx("rationals"), "--trials", "5")
    assert set(rep["timing"]) == {"milliseconds"}
    assert all("milliseconds" not in c for c in rep["checks"])


def test_seed_changes_sample(capsys):
    base = ("star", "verify", "--order", "2", "--vars", "2", "--trials", "3",
            "--format", "json", "--no-timing")
    a = run(capsys, *base, "--seed", "1")[1]
    b = run(capsys, *base, "--seed", "1")[1]
    c = run(capsys, *base, "--seed", "2")[1]
    assert a == b
    assert json.loads(a)["seed"] == 1 and json.loads(c)["seed"] == 2


def test_poisson_jacobi(capsys):
    assert run(capsys, "poisson", "jacobi", fx("bivector_so3"))[0] == 0
    code, rep, _ = run_json(capsys, "poisson", "jacobi", fx("bivector_non_poisson"))
    assert code == 1
    w = rep["checks"][0]["witness"]
    assert w["triple"] == [0, 1, 2] and w["value"]["monomials"]


@pytest.mark.parametrize("suite", ["bicomplex", "homotopy", "bracket", "hodge", "mc"])
def test_verify_suites_on_one_fixture(capsys, suite):
    code, rep, _ = run_json(capsys, "verify", suite, fx("dual_numbers"), "--trials", "10",
                            "--max-degree", "3")
    assert code == 0, [c for c in rep["checks"] if c["status"] == "fail"]
    assert rep["status"] == "pass"


def test_verify_schouten_with_files(capsys):
    code, rep, _ = run_json(capsys, "verify", "schouten", fx("bivector_so3"),
                            fx("bivector_non_poisson"), "--trials", "10")
    assert code == 0
    table = next(c for c in rep["checks"] if c["name"].startswith("[g,g]"))["detail"]["bivectors"]
    assert table[fx("bivector_so3")]["poisson"] is True
    assert table[fx("bivector_non_poisson")]["poisson"] is False


def test_console_script_and_module():
    for cmd in (["hhw"], [sys.executable, "-m", "hhw"]):
        p = subprocess.run(cmd + ["validate", fx("rationals")], capture_output=True, text=True)
        assert p.returncode == 0, p.stderr
        assert "PASS" in p.stdout
