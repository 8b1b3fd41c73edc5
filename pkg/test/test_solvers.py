import math

import numpy
import pytest
from helpers import cfp_oracle, ep_oracle, table
from hypothesis import given, settings
from hypothesis import strategies as st

import eqreg
from eqreg.solvers import extend_from_truncation


def half_line(n_max=6):
    return eqreg.TruncationSchedule(0.0, math.inf, 0.125, 1, n_max)


def test_solve_ep_and_cfp():
    t = table([[0.0, 1.0, -1.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    ep = eqreg.solve_ep(t)
    cfp = eqreg.solve_cfp(t)
    assert list(ep) == [1, 2]
    assert list(cfp) == [2]
    assert cfp.issubset(ep)
    assert 2 in cfp
    assert 0 not in cfp
    numpy.testing.assert_array_equal(cfp.points, [1.0])
    assert ep.problem == "EP"
    assert cfp.problem == "CFP"


def test_empty_solution_set():
    t = table([[0.0, 1.0], [1.0, 0.0]])
    cfp = eqreg.solve_cfp(t)
    assert cfp.is_empty
    assert cfp.as_dict()["indices"] == []
    assert eqreg.check_properly_quasimonotone(t)


def test_local_cfp():
    t = table([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    assert list(eqreg.solve_cfp(t)) == [0, 1]
    local = eqreg.solve_cfp(t, radius=0.5)
    assert list(local) == [0, 1, 2]
    assert local.problem == "local CFP"
    assert eqreg.solve_cfp(t).issubset(local)
    with pytest.raises(eqreg.ConfigurationError):
        eqreg.solve_cfp(t, radius=0.0)


def test_ky_fan_point():
    result = eqreg.ky_fan_point(table([[0.0, 1.0], [-1.0, 0.0]]))
    assert result.index == 0
    assert result.floor == 0.0
    assert result.verdict

    # floors of -1 everywhere against a zero diagonal
    t = table([[0.0, -1.0, -1.0], [-1.0, 0.0, 5.0], [-1.0, -1.0, 0.0]])
    result = eqreg.ky_fan_point(t)
    assert result.floor == -1.0
    assert result.diagonal_floor == 0.0
    assert not result.verdict
    assert result.verdict.witness.indices == {"x": 0, "y": 1, "w": 0}


def test_extend_from_truncation():
    t = table([[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 0.0, 0.0]])
    interior = numpy.array([True, True, False])
    assert extend_from_truncation(t, 0, interior) == 0
    assert extend_from_truncation(t, 2, interior) == 1
    t = table([[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]])
    assert extend_from_truncation(t, 2, interior) is None


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 8).flatmap(
        lambda n: st.lists(
            st.lists(
                st.floats(-2.0, 2.0, allow_nan=False), min_size=n, max_size=n
            ),
            min_size=n,
            max_size=n,
        )
    )
)
def test_solution_sets_match_definition(values):
    t = table(values)
    assert list(eqreg.solve_ep(t)) == ep_oracle(values)
    assert list(eqreg.solve_cfp(t)) == cfp_oracle(values)


def test_coercivity_ascent():
    spec = eqreg.builtin_spec("linear-ascent")
    for kind in ("C1", "C2"):
        report = eqreg.check_coercivity(spec, half_line(), kind)
        assert report.passed
        assert list(report.directions) == [1]
        verdict = report.directions[1]
        assert verdict.n0 == 1
        assert verdict.u == 0.0
    report = eqreg.check_coercivity(spec, half_line(), "C3")
    assert report.passed
    assert "vacuous" in report.directions[1].note


def test_coercivity_descent():
    spec = eqreg.builtin_spec("linear-descent")
    for kind in ("C1", "C2", "C3"):
        report = eqreg.check_coercivity(spec, half_line(), kind)
        assert not report.passed, kind
        assert len(report.directions[1].trajectory) == 5
    assert report.as_dict()["directions"]["1"]["passed"] is False


def test_coercivity_both_directions():
    spec = eqreg.builtin_spec("example-1-f1")
    schedule = eqreg.TruncationSchedule(-math.inf, math.inf, 0.125, 1, 5)
    report = eqreg.check_coercivity(spec, schedule, "C1")
    assert report.directions[1].passed
    assert report.directions[1].u == 0.0
    assert not report.directions[-1].passed
    assert not report.passed


def test_coercivity_errors():
    spec = eqreg.builtin_spec("linear-ascent")
    with pytest.raises(eqreg.UsageError):
        eqreg.check_coercivity(spec, half_line(), "C4")
    with pytest.raises(eqreg.UsageError):
        eqreg.check_coercivity(spec, half_line(2), "C1")
    bounded = eqreg.TruncationSchedule(0.0, 1.0, 0.125, 1, 3)
    with pytest.raises(eqreg.UsageError):
        eqreg.check_coercivity(spec, bounded, "C1")


def test_pipeline_ascent():
    result = eqreg.existence_pipeline(
        eqreg.builtin_spec("linear-ascent"), half_line(), "C2"
    )
    assert result.found
    assert result.point == 0.0
    assert result.level == 1
    assert result.escape == 0.0
    assert result.levels[0].checks["semistrictly_quasiconvex"]


def test_pipeline_descent():
    result = eqreg.existence_pipeline(
        eqreg.builtin_spec("linear-descent"), half_line(), "C2"
    )
    assert not result.found
    assert result.outcome == "exhausted"
    assert len(result.levels) == 6
    coercivity = result.diagnostics["coercivity"]
    assert coercivity["kind"] == "C2"
    assert coercivity["passed"] is False


def test_pipeline_upper_sign_variant():
    result = eqreg.existence_pipeline(
        eqreg.builtin_spec("one-over-y"), half_line(4), "C3"
    )
    assert result.found
    assert result.point == 0.0
    assert result.levels[0].checks["upper_sign"]


def test_pipeline_errors():
    spec = eqreg.builtin_spec("linear-ascent")
    with pytest.raises(eqreg.UsageError):
        eqreg.existence_pipeline(spec, half_line(), "C1")
    bounded = eqreg.TruncationSchedule(0.0, 1.0, 0.125, 1, 3)
    with pytest.raises(eqreg.UsageError):
        eqreg.existence_pipeline(spec, bounded, "C2")


@pytest.mark.parametrize("spacing,n_max", [(0.3, 8), (2.0, 3)])
def test_pipeline_descent_spacing_off_level(spacing, n_max):
    # the largest grid point of K_n falls short of n and cannot escape
    schedule = eqreg.TruncationSchedule(0.0, math.inf, spacing, 1, n_max)
    result = eqreg.existence_pipeline(
        eqreg.builtin_spec("linear-descent"), schedule, "C2"
    )
    assert result.outcome == "exhausted"
    assert result.point is None
    assert len(result.levels) == n_max
    for record in result.levels:
        assert record.interior == [False]


def test_pipeline_coarse_diagnostics():
    schedule = eqreg.TruncationSchedule(0.0, math.inf, 2.0, 1, 3)
    result = eqreg.existence_pipeline(
        eqreg.builtin_spec("linear-descent"), schedule, "C2"
    )
    assert not result.found
    assert "too coarse" in result.diagnostics["coercivity"]["error"]


@pytest.mark.parametrize(
    "spacing,n_max,level", [(0.3, 8, 1), (0.125, 6, 1), (2.0, 3, 2)]
)
def test_pipeline_ascent_spacing(spacing, n_max, level):
    schedule = eqreg.TruncationSchedule(0.0, math.inf, spacing, 1, n_max)
    result = eqreg.existence_pipeline(
        eqreg.builtin_spec("linear-ascent"), schedule, "C2"
    )
    assert result.found
    assert result.point == 0.0
    assert result.level == level


@pytest.mark.parametrize("kind", ["C1", "C2", "C3"])
def test_coercivity_schedule_too_coarse(kind):
    schedule = eqreg.TruncationSchedule(0.0, math.inf, 2.0, 1, 3)
    with pytest.raises(eqreg.ConfigurationError):
        eqreg.check_coercivity(eqreg.builtin_spec("linear-ascent"), schedule, kind)


@pytest.mark.parametrize("spacing", [1.5, 0.75])
def test_coercivity_coarse_spacing(spacing):
    schedule = eqreg.TruncationSchedule(0.0, math.inf, spacing, 1, 4)
    ascent = eqreg.builtin_spec("linear-ascent")
    for kind in ("C1", "C2"):
        verdict = eqreg.check_coercivity(ascent, schedule, kind).directions[1]
        assert verdict.passed, kind
        assert verdict.n0 == 1
        assert verdict.u == 0.0
    # y + 1 is off the grid
    with pytest.raises(eqreg.ConfigurationError):
        eqreg.check_coercivity(ascent, schedule, "C3")


def test_coercivity_empty_tail_skipped():
    schedule = eqreg.TruncationSchedule(0.0, math.inf, 1.5, 1, 4)
    descent = eqreg.builtin_spec("linear-descent")
    for kind in ("C1", "C2"):
        report = eqreg.check_coercivity(descent, schedule, kind)
        assert not report.passed
        # K_4 ends at 3, so n0 = 3 has no tail
        assert [n for n, _ in report.directions[1].trajectory] == [1, 2]


if __name__ == "__main__":
    test_pipeline_ascent()
