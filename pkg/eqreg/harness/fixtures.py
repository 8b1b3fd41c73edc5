"""Worked examples with known answers.

Each fixture samples its bifunction (or builds a constant table), runs the
regularizations, checkers and solvers on it, and compares every result with an
expectation: index sets exactly, values within ``tol``.
"""
import logging
import math
import time
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

import numpy

from .._exceptions import UsageError
from ..bifunction import (
    ValueTable,
    builtin_spec,
    classify_families,
    regularize,
    sample_matrix,
)
from ..domain import TruncationSchedule, make_grid, truncation_grid
from ..envelope import shape_check
from ..helpers import Tolerances
from ..properties import (
    check_monotonicity,
    check_properly_quasimonotone,
    check_segment_condition,
    check_upper_sign,
)
from ..solvers import (
    check_coercivity,
    existence_pipeline,
    ky_fan_point,
    solve_cfp,
    solve_ep,
)
from .report import SuiteReport

logger = logging.getLogger(__name__)

GRID_COUNT = 201
SPACING = 0.125


@dataclass(frozen=True)
class ExampleFixture:
    name: str
    description: str
    specs: Tuple[str, ...]
    run: Callable[[SuiteReport, Tolerances], None]
    grid: Optional[Tuple[float, float, int]] = None
    schedule: Optional[Tuple[float, float, float, int, int]] = None

    def make_grid(self):
        return make_grid(*self.grid)

    def make_schedule(self):
        return TruncationSchedule(*self.schedule)


FIXTURES: Dict[str, ExampleFixture] = {}


def _fixture(name, description, specs=(), grid=None, schedule=None):
    def register(run):
        FIXTURES[name] = ExampleFixture(
            name, description, tuple(specs), run, grid, schedule
        )
        return run

    return register


def _indices(solutions):
    return [int(i) for i in solutions]


def _witness_points(verdict):
    return None if verdict.witness is None else dict(verdict.witness.points)


@_fixture(
    "spike",
    "two isolated positive values; every regularization is monotone",
    specs=("spike",),
    grid=(0.0, 1.0, GRID_COUNT),
)
def _spike(report, t):
    spec = builtin_spec("spike")
    grid = FIXTURES["spike"].make_grid()
    f = sample_matrix(spec, grid)
    verdict = check_monotonicity(f, "monotone", t.tol, t.tol_strict)
    report.verdicts["monotone(f)"] = verdict
    origin = "regularization preserves monotonicity: f itself is not monotone"
    report.expect("monotone(f)", False, verdict.passed, origin)
    report.expect(
        "monotone(f) witness", {"x": 1.0, "y": 0.0}, _witness_points(verdict), origin
    )
    for kind in ("lsc", "convex", "quasiconvex"):
        reg = regularize(f, kind, spec, t.refinement, t.tol)
        v = check_monotonicity(reg, "monotone", t.tol, t.tol_strict)
        report.verdicts[f"monotone(f_{kind})"] = v
        zero = numpy.zeros_like(reg.values)
        report.expect(f"f_{kind} = 0", zero, reg.values, origin, t.tol)
        report.expect(f"monotone(f_{kind})", True, v.passed, origin)


@_fixture(
    "cfp-endpoints",
    "CFP = {0, 1} while the closed convex regularization makes every point feasible",
    specs=("cfp-endpoints",),
    grid=(0.0, 1.0, GRID_COUNT),
)
def _cfp_endpoints(report, t):
    spec = builtin_spec("cfp-endpoints")
    grid = FIXTURES["cfp-endpoints"].make_grid()
    f = sample_matrix(spec, grid)
    origin = "convex feasibility example"
    cfp = solve_cfp(f, t.tol)
    report.solution_sets["CFP(f)"] = cfp
    report.expect("CFP(f)", [0, grid.count - 1], _indices(cfp), origin)
    reg = regularize(f, "convex_closed", spec, t.refinement, t.tol)
    report.expect("f_cbar = 0", numpy.zeros_like(reg.values), reg.values, origin, t.tol)
    cfp_reg = solve_cfp(reg, t.tol)
    report.solution_sets["CFP(f_cbar)"] = cfp_reg
    report.expect("CFP(f_cbar)", list(range(grid.count)), _indices(cfp_reg), origin)
    ep = solve_ep(f, t.tol)
    report.solution_sets["EP(f)"] = ep
    report.expect("EP(f)", list(range(grid.count)), _indices(ep), "f >= 0 everywhere")


@_fixture(
    "sq-example",
    "a jump at y = 1 removed by the quasiconvex regularization, f_q(x, y) = y - 2",
    specs=("sq-example",),
    grid=(0.0, 2.0, GRID_COUNT),
)
def _sq_example(report, t):
    spec = builtin_spec("sq-example")
    grid = FIXTURES["sq-example"].make_grid()
    f = sample_matrix(spec, grid)
    origin = "semistrictly quasiconvex regularization example"
    reg = regularize(f, "quasiconvex", spec, t.refinement, t.tol)
    report.tables["f_q"] = reg
    expected = numpy.broadcast_to(grid.points - 2.0, reg.values.shape)
    report.expect("f_q = y - 2", expected, reg.values, origin, t.tol)
    semistrict = all(
        shape_check(reg.row(i), "semistrictly_quasiconvex", t.tol, t.tol_strict).passed
        for i in range(len(reg))
    )
    report.expect("f_q rows semistrictly quasiconvex", True, semistrict, origin)
    for kind in ("alpha", "beta"):
        v = check_segment_condition(f, kind, t.tol, t.tol_strict)
        report.verdicts[f"{kind}(f)"] = v
        report.expect(f"{kind}(f)", False, v.passed, origin)
        points = [] if v.witness is None else list(v.witness.points.values())
        report.expect(f"{kind}(f) witness holds 1", True, 1.0 in points, origin)


@_fixture(
    "example-1",
    "f_1 = y^3 - x lies in Q minus C, f_2 = -ln|y| lies in S minus closed Q",
    specs=("example-1-f1", "example-1-f2"),
    schedule=(-math.inf, math.inf, SPACING, 1, 8),
)
def _example_1(report, t):
    schedule = FIXTURES["example-1"].make_schedule()
    origin = "family membership examples"
    f1 = builtin_spec("example-1-f1")
    families = classify_families(
        f1, schedule, tol=t.tol, tol_strict=t.tol_strict, refinement=t.refinement
    )
    report.verdicts["families(f_1)"] = families
    report.expect("f_1 in Q", True, families.is_member("Q"), origin)
    report.expect("f_1 not in C", True, families.is_not_member("C"), origin)

    f2 = builtin_spec("example-1-f2")
    families = classify_families(
        f2, schedule, tol=t.tol, tol_strict=t.tol_strict, refinement=t.refinement
    )
    report.verdicts["families(f_2)"] = families
    report.expect("f_2 in S", True, families.is_member("S"), origin)
    report.expect("f_2 not in Qbar", True, families.is_not_member("Qbar"), origin)

    c1 = check_coercivity(f1, schedule, "C1", tol=t.tol, refinement=t.refinement)
    report.verdicts["C1(f_1)"] = c1
    right, left = c1.directions[1], c1.directions[-1]
    report.expect(
        "C1(f_1) towards +inf",
        [True, 0.0],
        [right.passed, right.u],
        "y^3 - x <= 0 at u = 0 for x > 0",
    )
    report.expect(
        "C1(f_1) towards -inf", False, left.passed, "u^3 - x > 0 for x -> -inf"
    )


@_fixture(
    "one-over-y",
    "f(x, y) = 1/y has f_q = 0 and an EP solution found through truncations",
    specs=("one-over-y",),
    schedule=(0.0, math.inf, SPACING, 1, 5),
)
def _one_over_y(report, t):
    spec = builtin_spec("one-over-y")
    schedule = FIXTURES["one-over-y"].make_schedule()
    origin = "f_q(x, y) = 0 example"
    for n in schedule.levels:
        grid = truncation_grid(schedule, n)
        table = sample_matrix(spec, grid)
        reg = regularize(table, "quasiconvex_closed", spec, t.refinement, t.tol)
        within = bool(numpy.all(numpy.abs(reg.values) <= 1.0 / n + t.tol))
        report.expect(f"|f_qbar| <= 1/{n} on K_{n}", True, within, origin)
    # f(y, 0) = 0 and f(y, x) = 1/x > 0 elsewhere, also after lowering
    grid = truncation_grid(schedule, schedule.n_min)
    table = sample_matrix(spec, grid)
    lowered = regularize(table, "lsc", spec, t.refinement, t.tol)
    f_q = regularize(table, "quasiconvex", tol=t.tol)
    for label, g in (("f", table), ("f_s", lowered), ("f_q", f_q)):
        local = solve_cfp(g, t.tol, SPACING)
        report.solution_sets[f"local CFP({label})"] = local
        report.expect(f"local CFP({label}) on K_1", [0], _indices(local), origin)
    ep = solve_ep(table, t.tol)
    report.expect("EP(f) is all of K_1", grid.count, len(ep), origin)
    result = existence_pipeline(
        spec, schedule, "C3", t.tol, t.tol_strict, t.refinement
    )
    report.verdicts["exist(C3)"] = result
    report.expect("C3 pipeline finds a solution", "solution", result.outcome, origin)
    c1 = check_coercivity(spec, schedule, "C1", tol=t.tol, refinement=t.refinement)
    report.verdicts["C1"] = c1
    observed = [c1.passed, c1.directions[1].u]
    report.expect("C1 with u = 0", [True, 0.0], observed, "f(x, 0) = 0")


@_fixture(
    "r1-quasiconvex",
    "compact existence on [0, 2] through the quasiconvex regularization",
    specs=("r1-quasiconvex",),
    grid=(0.0, 2.0, GRID_COUNT),
)
def _r1_quasiconvex(report, t):
    spec = builtin_spec("r1-quasiconvex")
    grid = FIXTURES["r1-quasiconvex"].make_grid()
    f = sample_matrix(spec, grid)
    # f(1, .) >= 0 and f(2, .) = 0, so both 1 and 2 solve EP
    origin = "brute-force EP on the 201-point grid"
    expected = [grid.index_of(1.0), grid.index_of(2.0)]
    ep = solve_ep(f, t.tol)
    report.solution_sets["EP(f)"] = ep
    report.expect("EP(f)", expected, _indices(ep), origin)
    reg = regularize(f, "quasiconvex", spec, t.refinement, t.tol)
    ep_q = solve_ep(reg, t.tol)
    report.solution_sets["EP(f_q)"] = ep_q
    report.expect("EP(f_q)", expected, _indices(ep_q), origin)
    ky_fan = ky_fan_point(reg, t.tol).verdict
    report.expect("Ky Fan point of f_q", True, ky_fan.passed, origin)


@_fixture(
    "rational-constant",
    "regularizations 0 (x rational) and -1 (x irrational) of an upper sign bifunction",
    grid=(0.0, 1.0, GRID_COUNT),
)
def _rational_constant(report, t):
    # the rational indicator itself has no grid rendition; only the stated
    # regularized constants are checked
    grid = FIXTURES["rational-constant"].make_grid()
    origin = "upper sign is not inherited by the regularizations"
    zero = ValueTable(grid, numpy.zeros((grid.count, grid.count)), "f_i(rational)")
    minus = ValueTable(grid, -numpy.ones((grid.count, grid.count)), "f_i(irrational)")
    upper_sign = check_upper_sign(zero, tol=t.tol)
    report.expect("upper sign of 0", True, upper_sign.passed, origin)
    report.expect(
        "properly quasimonotone 0",
        True,
        check_properly_quasimonotone(zero, "pair", t.tol).passed,
        origin,
    )
    v = check_upper_sign(minus, tol=t.tol)
    report.verdicts["upper_sign(-1)"] = v
    report.expect("upper sign of -1", False, v.passed, origin)
    report.expect(
        "monotone -1",
        True,
        check_monotonicity(minus, "monotone", t.tol, t.tol_strict).passed,
        origin,
    )
    report.expect(
        "properly quasimonotone -1",
        True,
        check_properly_quasimonotone(minus, "pair", t.tol).passed,
        origin,
    )
    report.expect("EP(-1)", [], _indices(solve_ep(minus, t.tol)), origin)
    cfp = solve_cfp(minus, t.tol)
    report.expect("CFP(-1)", list(range(grid.count)), _indices(cfp), origin)


@_fixture(
    "rational-lsc",
    "f_s = 0 for the rational indicator on R: properly quasimonotone with upper sign",
    grid=(-1.0, 1.0, GRID_COUNT),
)
def _rational_lsc(report, t):
    grid = FIXTURES["rational-lsc"].make_grid()
    origin = "lsc regularization of the rational indicator"
    f_s = ValueTable(grid, numpy.zeros((grid.count, grid.count)), "f_s")
    report.expect("upper sign", True, check_upper_sign(f_s, tol=t.tol).passed, origin)
    report.expect(
        "properly quasimonotone (pair)",
        True,
        check_properly_quasimonotone(f_s, "pair", t.tol).passed,
        origin,
    )
    small = ValueTable(make_grid(-1.0, 1.0, 9), numpy.zeros((9, 9)), "f_s")
    report.expect(
        "properly quasimonotone (subset)",
        True,
        check_properly_quasimonotone(small, "subset", t.tol).passed,
        origin,
    )
    local = solve_cfp(f_s, t.tol, radius=grid.spacing)
    report.solution_sets["local CFP(f_s)"] = local
    report.expect("local CFP = K", list(range(grid.count)), _indices(local), origin)


@_fixture(
    "linear-ascent",
    "f(x, y) = y - x on [0, inf): EP = {0}, found on the first truncation",
    specs=("linear-ascent",),
    schedule=(0.0, math.inf, SPACING, 1, 8),
)
def _linear_ascent(report, t):
    spec = builtin_spec("linear-ascent")
    schedule = FIXTURES["linear-ascent"].make_schedule()
    result = existence_pipeline(spec, schedule, "C2", t.tol, t.tol_strict, t.refinement)
    report.verdicts["exist(C2)"] = result
    origin = "f(0, y) = y >= 0"
    observed = [result.outcome, result.point, result.level]
    report.expect("C2 pipeline solution", ["solution", 0.0, 1], observed, origin)


@_fixture(
    "linear-descent",
    "f(x, y) = x - y on [0, inf): EP is empty, the pipeline is exhausted",
    specs=("linear-descent",),
    schedule=(0.0, math.inf, SPACING, 1, 8),
)
def _linear_descent(report, t):
    spec = builtin_spec("linear-descent")
    schedule = FIXTURES["linear-descent"].make_schedule()
    result = existence_pipeline(spec, schedule, "C2", t.tol, t.tol_strict, t.refinement)
    report.verdicts["exist(C2)"] = result
    origin = "every truncation solution sits on the boundary n"
    report.expect("C2 pipeline exhausted", "exhausted", result.outcome, origin)
    coercivity = result.diagnostics.get("coercivity", {})
    observed = [coercivity.get("passed"), coercivity.get("kind")]
    report.expect("C2 fails", [False, "C2"], observed, origin)


def fixture_names():
    return sorted(FIXTURES)


def run_example(name, tolerances=None):
    """Run one registered fixture and return its report.

    Raises
    ------
    UsageError
        ``name`` is not registered.
    """
    if name not in FIXTURES:
        raise UsageError(f"unknown example {name!r}; choose from {fixture_names()}")
    t = tolerances or Tolerances()
    fixture = FIXTURES[name]
    report = SuiteReport(
        "example", inputs={"name": name, **t.as_dict(), "refinement": t.refinement}
    )
    start = time.perf_counter()
    fixture.run(report, t)
    report.wall_time = time.perf_counter() - start
    for check in report.checks:
        check.wall_time = None
    logger.info(
        "example %s: %d/%d expectations met in %.3fs",
        name,
        sum(c.passed for c in report.checks),
        len(report.checks),
        report.wall_time,
    )
    return report
