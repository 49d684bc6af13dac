import json
import subprocess
import sys

import pytest

from stablemac.cli import main


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out.strip()


@pytest.mark.parametrize("argv, want", [
    (["compute", "E", "--mu", "1"], "x1"),
    (["compute", "weight", "--mu", "0,2"], '[(2, "q^2*t")]'),
    (["compute", "pair", "--mu", "1", "--lambda", "1,1"], "x1 * P[1,1](x2+...)"),
    (["compute", "A", "--lambda", "2"], "HLP: [2]: 1; [1,1]: 1/(q - t)"),
    (["compute", "stableE", "--mu", "2,0"], "x1^2 + ((1 - t)/(q - t))*x1*m[1](x2+...)"),
    (["compute", "weight", "--mu", "1", "--lambda", "1,1"], '[(1, "q*t^3")]'),
    (["compute", "weight", "--mu", "empty", "--lambda", "2"], "[]"),
])
def test_compute(argv, want, capsys):
    assert run(argv, capsys) == (0, want)


def test_compute_json(capsys):
    code, out = run(["compute", "stableE", "--mu", "2", "--format", "json"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["split"] == 1 and obj["terms"][0] == {"x": [2], "m": [], "coeff": "1"}
    code, out = run(["compute", "weight", "--mu", "0,2", "--format", "json"], capsys)
    assert json.loads(out) == [[2, "q^2*t"]]


@pytest.mark.parametrize("argv", [
    ["verify", "daha-relations", "--n", "3", "--box", "-1..2"],
    ["verify", "oracle-vs-hhl", "--max-size", "3"],
    ["verify", "basis", "--k", "2", "--deg", "3"],
    ["verify", "projection", "--trials", "20"],
])
def test_verify_passes(argv, capsys):
    code, out = run(argv, capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "pass" and rep["checked"] > 0


def test_verify_basis_reports_count(capsys):
    code, out = run(["verify", "basis", "--k", "2", "--deg", "3"], capsys)
    (cert,) = json.loads(out)["checks"]
    assert cert["count"] == cert["dim"]


@pytest.mark.parametrize("argv", [
    ["compute", "E", "--mu", "1,x"],
    ["compute", "pair", "--mu", "1", "--lambda", "1,2"],
    ["verify", "eigen", "--max-size", "40"],
    ["verify", "daha-relations", "--box", "3..1"],
    ["compute", "E"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_fixtures_check_and_corruption(tmp_path, capsys):
    import shutil

    from stablemac.fixtures import DATA_DIR

    assert run(["fixtures", "check"], capsys)[0] == 0
    d = tmp_path / "d"
    shutil.copytree(DATA_DIR, d)
    p = d / "derived_weights.txt"
    p.write_text(p.read_text(encoding="utf-8").replace('"q*t"', '"q*t^2"', 1), encoding="utf-8")
    code, out = run(["fixtures", "check", "--dir", str(d)], capsys)
    assert code == 1
    assert "derived_weights.txt" in out and "- " in out


def test_fixtures_freeze(tmp_path, capsys):
    code, out = run(["fixtures", "freeze", "--dir", str(tmp_path)], capsys)
    assert code == 0 and "derived_gamma.txt" in out


def test_dump_fillings(capsys):
    code, out = run(["dump-fillings", "--mu", "1", "--n", "1"], capsys)
    assert code == 0 and out.splitlines() == ["(1,1):1 | maj=0 coinv=0 gamma=1"]
    code, out = run(["dump-fillings", "--mu", "1,1", "--n", "2"], capsys)
    for line in out.splitlines():
        labels = sorted(int(c.split(":")[1]) for c in line.split(" | ")[0].split())
        assert labels == [1, 2]
    code, out = run(["dump-fillings", "--mu", "2", "--lambda", "1", "--format", "csv"], capsys)
    rows = out.splitlines()
    assert rows[0] == "cells,maj,coinv,gamma,contribution"
    assert len(rows) == 2 and ":2" in rows[1]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "e.txt"
    assert main(["compute", "E", "--mu", "2,0", "--out", str(target)]) == 0
    assert target.read_text(encoding="utf-8").strip() == str(__import__("stablemac").hhl_E((2, 0)))


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "stablemac", "compute", "E", "--mu", "1"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and r.stdout.strip() == "x1"
