import json

import pytest

import eqreg
from eqreg._cli import main


def run(capsys, *argv):
    code = main([*argv, "-q"])
    out, err = capsys.readouterr()
    return code, out, err


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    out, _ = capsys.readouterr()
    assert out.startswith(f"eqreg {eqreg.__version__}")
    assert out.splitlines()[1] == "License GPL-3.0-or-later"


def test_solve_cfp(capsys):
    code, out, _ = run(capsys, "solve-cfp", "cfp-endpoints")
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "solve-cfp"
    assert data["inputs"]["spec"] == "cfp-endpoints"
    assert data["results"]["solution_sets"]["CFP(cfp-endpoints)"]["indices"] == [0, 200]


def test_solve_ep_regularized(capsys):
    code, out, _ = run(capsys, "solve-ep", "cfp-endpoints", "--kind", "cbar")
    assert code == 0
    sets = json.loads(out)["results"]["solution_sets"]
    assert sets["EP(cfp-endpoints_cbar)"]["indices"] == list(range(201))


def test_regularize_row_csv(capsys):
    code, out, _ = run(
        capsys,
        "regularize",
        "sq-example",
        "--kind",
        "q",
        "--row",
        "0",
        "--grid=0:2:5",
        "--format",
        "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "y,value"
    assert lines[1] == "0.0,-2.0"
    assert len(lines) == 6


def test_check(capsys):
    code, out, _ = run(
        capsys,
        "check",
        "spike",
        "--grid=0:1:5",
        "--property",
        "monotone",
        "--property",
        "upper_sign",
    )
    assert code == 0
    verdicts = json.loads(out)["results"]["verdicts"]
    assert sorted(verdicts) == ["monotone", "upper_sign"]
    assert verdicts["monotone"]["passed"] is False
    assert verdicts["monotone"]["witness"]["points"] == {"x": 1.0, "y": 0.0}


def test_classify(capsys):
    code, out, _ = run(
        capsys, "classify", "linear-ascent", "--schedule", "0.125:1:3"
    )
    assert code == 0
    families = json.loads(out)["results"]["verdicts"]["families"]
    assert families["C"]["verdict"] == "member"


def test_coercivity(capsys):
    code, out, _ = run(
        capsys,
        "coercivity",
        "linear-descent",
        "--condition",
        "C2",
        "--schedule",
        "0.125:1:4",
    )
    assert code == 0
    assert json.loads(out)["results"]["verdicts"]["C2"]["passed"] is False


def test_exist(capsys):
    code, out, _ = run(capsys, "exist", "linear-ascent", "--schedule", "0.125:1:4")
    assert code == 0
    result = json.loads(out)["results"]["verdicts"]["C2"]
    assert result["outcome"] == "solution"
    assert result["point"] == 0.0


def test_example(capsys):
    code, out, _ = run(capsys, "example", "linear-ascent", "spike")
    assert code == 0
    checks = json.loads(out)["results"]["checks"]
    assert checks
    assert all(c["status"] == "pass" for c in checks)
    assert any(c["name"].startswith("spike: ") for c in checks)


def test_suite(capsys, tmp_path):
    path = tmp_path / "suite.json"
    code, out, _ = run(
        capsys, "suite", "hierarchy", "--instances", "2", "--out", str(path)
    )
    assert code == 0
    assert out == ""
    data = json.loads(path.read_text())
    assert data["results"]["checks"][0]["name"] == "hierarchy"
    assert data["inputs"]["seed"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["solve-ep", "nope"],
        ["solve-ep", "spike", "--grid", "0:1"],
        ["solve-ep", "spike", "--grid", "0:1:x"],
        ["solve-ep", "spike", "--grid=-1:1:5"],
        ["regularize", "spike", "--kind", "concave"],
        ["example", "nope"],
        ["suite", "hierarchy", "--instances", "0"],
    ],
)
def test_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error: ")


def test_syntax_error(capsys, tmp_path):
    path = tmp_path / "bad.ini"
    path.write_text("[bifunction]\nexpression = y $ x\ndomain = 0 1\n")
    code, _, err = run(capsys, "solve-ep", str(path))
    assert code == 2
    assert "y $ x\n  ^\n" in err

