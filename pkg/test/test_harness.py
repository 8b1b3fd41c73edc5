import json
import math

import numpy
import pytest
from helpers import sampled, table

import eqreg
from eqreg.harness import (
    CLASSES,
    FIXTURES,
    CheckResult,
    SuiteReport,
    fixture_names,
    random_row,
    suite_names,
    to_csv,
    to_json,
)


@pytest.mark.parametrize("name", fixture_names())
def test_example(name):
    report = eqreg.run_example(name)
    assert report.checks
    assert report.passed, [c.as_dict() for c in report.failures]
    assert FIXTURES[name].description


def test_unknown_example():
    with pytest.raises(eqreg.UsageError):
        eqreg.run_example("nope")


@pytest.mark.parametrize("cls", CLASSES)
def test_random_bifunction(cls):
    grid = eqreg.make_grid(0.0, 1.0, 6)
    a = eqreg.random_bifunction(cls, 3, grid)
    b = eqreg.random_bifunction(cls, 3, grid)
    assert a == b
    assert a != eqreg.random_bifunction(cls, 4, grid)
    assert a.label == f"{cls}[3]"
    if cls == "monotone":
        assert eqreg.check_monotonicity(a, "monotone")
    if cls in ("monotone", "pseudomonotone"):
        assert eqreg.check_monotonicity(a, "pseudomonotone")
    if cls in ("monotone", "pseudomonotone", "quasimonotone"):
        assert eqreg.check_monotonicity(a, "quasimonotone")
    if cls == "properly_quasimonotone":
        assert eqreg.check_properly_quasimonotone(a, method="pair")
        assert eqreg.check_properly_quasimonotone(a, method="subset")
    if cls == "sq":
        for i in range(len(a)):
            assert eqreg.shape_check(a.row(i), "semistrictly_quasiconvex")


def test_random_bifunction_errors():
    grid = eqreg.make_grid(0.0, 1.0, 4)
    with pytest.raises(eqreg.UsageError):
        eqreg.random_bifunction("cyclic", 0, grid)
    with pytest.raises(eqreg.GenerationError) as info:
        eqreg.random_bifunction("sq", 5, grid, retries=0)
    assert info.value.seed == 5


def test_random_row():
    grid = eqreg.make_grid(0.0, 1.0, 11)
    row = random_row(1, grid, spread=2.0)
    assert row == random_row(1, grid, spread=2.0)
    assert numpy.all(numpy.abs(row.values) <= 2.0)


def test_run_suite():
    names = [n for n in suite_names() if n not in ("coercivity-chain", "fixtures")]
    report = eqreg.run_suite(names, instances=3, seed=11)
    assert [c.name for c in report.checks] == names
    assert report.passed, [c.as_dict() for c in report.failures]
    for check in report.checks:
        assert check.instances == 3
        assert check.seeds == []
        assert check.provenance


def test_run_suite_coercivity_chain():
    report = eqreg.run_suite(["coercivity-chain"], instances=2)
    assert report.passed, report.checks[0].failures


def test_suite_replay():
    a = eqreg.run_suite(["hierarchy", "ky-fan-floor"], instances=5, seed=2)
    b = eqreg.run_suite(["hierarchy", "ky-fan-floor"], instances=5, seed=2)
    da = a.as_dict()
    db = b.as_dict()
    da.pop("timestamp")
    db.pop("timestamp")
    assert da == db
    assert "wall_time" not in da
    timed = eqreg.run_suite(["hierarchy"], instances=1, timing=True).as_dict(True)
    assert timed["wall_time"] >= 0.0


def test_run_suite_errors():
    with pytest.raises(eqreg.UsageError):
        eqreg.run_suite(["nope"])
    with pytest.raises(eqreg.UsageError):
        eqreg.run_suite(["hierarchy"], instances=0)


def test_expect():
    report = SuiteReport("example")
    assert report.expect("set", [0, 200], numpy.array([0, 200])).passed
    assert report.expect("value", [0.0, 1.0], [1.0e-12, 1.0], tol=1.0e-9).passed
    assert report.expect("unbounded", math.inf, math.inf).passed
    assert not report.expect("flag", True, False).passed
    assert not report.passed
    assert [c.name for c in report.failures] == ["flag"]
    check = report.checks[2].as_dict()
    assert check["expected"] == "inf"
    assert check["status"] == "pass"
    assert "wall_time" not in check


def test_json():
    report = SuiteReport("solve-cfp", inputs={"tol": 1e-9})
    report.solution_sets["CFP"] = eqreg.solve_cfp(table([[0.0, 1.0], [1.0, 0.0]]))
    report.add(CheckResult("nothing", True))
    data = json.loads(to_json(report))
    assert set(data) == {
        "tool_version",
        "command",
        "inputs",
        "results",
        "seeds",
        "timestamp",
    }
    assert data["tool_version"] == eqreg.__version__
    assert data["results"]["solution_sets"]["CFP"]["indices"] == []
    assert data["results"]["checks"][0]["status"] == "pass"

    # bare results are wrapped into a report
    data = json.loads(to_json(eqreg.solve_ep(table([[0.0, 1.0], [1.0, 0.0]]))))
    assert data["command"] == "SolutionSet"
    assert data["results"]["solution_sets"]["result"]["indices"] == [0, 1]


def test_csv():
    assert to_csv(sampled([-2.0, -1.0])) == "y,value\n0.0,-2.0\n1.0,-1.0\n"
    lines = to_csv(table([[0.0, 1.0], [2.0, 3.0]])).splitlines()
    assert lines[0] == "x,y,value"
    assert lines[3] == "1.0,0.0,2.0"
    assert len(lines) == 5
    assert to_csv(eqreg.solve_cfp(table([[0.0, 1.0], [1.0, 0.0]]))) == "x\n"

    report = SuiteReport("regularize")
    report.tables["f_q"] = table([[0.0]])
    assert to_csv(report) == "x,y,value\n0.0,0.0,0.0\n"
    report.solution_sets["EP"] = eqreg.solve_ep(table([[0.0]]))
    with pytest.raises(eqreg.UsageError):
        to_csv(report)
    with pytest.raises(eqreg.UsageError):
        to_csv(CheckResult("nothing", True))


def test_emit_report(tmp_path):
    report = SuiteReport("example")
    path = tmp_path / "out.json"
    text = eqreg.emit_report(report, out=path)
    assert path.read_text() == text
    with pytest.raises(eqreg.EqregError):
        eqreg.emit_report(report, out=tmp_path / "missing" / "out.json")
    with pytest.raises(eqreg.UsageError):
        eqreg.emit_report(report, fmt="xml")


@pytest.mark.parametrize("name", ["lsc-cfp-subset-ep", "sq-local-cfp-subset-ep"])
def test_extension_suites(name):
    report = eqreg.run_suite([name], instances=60, seed=0)
    check = report.checks[0]
    assert check.passed, check.failures
    assert check.premise_hits > 0


def test_lowered_cfp_inside_ep():
    # a jump column: f_s = 0 solves CFP everywhere while f does not at y = 0.5
    spec = eqreg.BifunctionSpec("if y == 0.5: 3; else: 0", (0.0, 1.0))
    f = eqreg.sample_matrix(spec, eqreg.make_grid(0.0, 1.0, 5))
    f_s = eqreg.regularize(f, "lsc", spec)
    numpy.testing.assert_array_equal(f_s.values, numpy.zeros((5, 5)))
    assert eqreg.check_upper_sign(f_s)
    assert list(eqreg.solve_cfp(f)) == [0, 1, 3, 4]
    assert list(eqreg.solve_cfp(f_s)) == [0, 1, 2, 3, 4]
    assert list(eqreg.solve_ep(f)) == [0, 1, 2, 3, 4]


@pytest.mark.slow
@pytest.mark.parametrize(
    "name", ["regularization-equality", "monotonicity-preservation", "envelope-oracles"]
)
def test_suite_acceptance_counts(name):
    report = eqreg.run_suite([name])
    check = report.checks[0]
    assert check.instances == 500
    assert check.passed, check.failures


if __name__ == "__main__":
    test_run_suite()
