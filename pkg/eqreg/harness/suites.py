"""Randomized verification suites.

A suite draws one instance per seed ``seed + k`` for ``k < instances``, checks
a premise on it and, when the premise holds, the conclusion. Failures keep the
seed and a witness so that ``run_suite([name], 1, seed)`` replays them.
"""
import logging
import time
from typing import Callable, Dict, NamedTuple, Optional

import numpy

from .._exceptions import UsageError
from ..bifunction import (
    BifunctionSpec,
    ValueTable,
    builtin_spec,
    regularize,
    sample_matrix,
)
from ..domain import TruncationSchedule, make_grid
from ..envelope import (
    SampledFunction,
    affine_minorant,
    convex_envelope,
    envelope_oracle,
    quasiconvex_envelope,
    shape_check,
)
from ..helpers import Tolerances
from ..properties import (
    check_monotonicity,
    check_properly_quasimonotone,
    check_segment_condition,
    check_semistrict_diagonal,
    check_upper_sign,
)
from ..properties.monotonicity import KINDS
from ..solvers import check_coercivity, ky_fan_point, solve_cfp, solve_ep
from .fixtures import FIXTURES, run_example
from .generators import random_bifunction
from .report import CheckResult, SuiteReport

logger = logging.getLogger(__name__)

MAX_RECORDED_FAILURES = 10
_FAST_ENVELOPES = (("convex", convex_envelope), ("quasiconvex", quasiconvex_envelope))


class Outcome(NamedTuple):
    hit: bool
    failure: Optional[dict] = None


class Suite(NamedTuple):
    name: str
    instances: int
    run: Callable[[int, Tolerances], Outcome]
    description: str


SUITES: Dict[str, Suite] = {}


def _suite(name, instances):
    def register(run):
        SUITES[name] = Suite(name, instances, run, (run.__doc__ or "").strip())
        return run

    return register


def _grid(rng, lo=2, hi=12):
    n = int(rng.integers(lo, hi + 1))
    return make_grid(0.0, 1.0 if n > 1 else 0.0, n)


def _lattice(rng, shape, step=0.25, levels=4):
    return rng.integers(-levels, levels + 1, shape) * step


def _perturbation(rng, n, zero_diagonal=False):
    d = rng.uniform(0.0, 1.0, (n, n)) * (rng.random((n, n)) < 0.5)
    if zero_diagonal:
        numpy.fill_diagonal(d, 0.0)
    return d


def _classes_passing(table, t):
    out = {k: check_monotonicity(table, k, t.tol, t.tol_strict).passed for k in KINDS}
    pqm = check_properly_quasimonotone(table, "pair", t.tol)
    out["properly_quasimonotone"] = pqm.passed
    return out


def _passes(table, cls, t):
    if cls == "properly_quasimonotone":
        return check_properly_quasimonotone(table, "pair", t.tol)
    return check_monotonicity(table, cls, t.tol, t.tol_strict)


def _repair_upper_sign(table, t, radius=None):
    """Raise violating entries to 0 until the upper sign check passes.

    Raising entries only weakens premises, so the loop ends after at most one
    step per entry.
    """
    values = table.values.copy()
    while True:
        verdict = check_upper_sign(table.with_values(values), radius, t.tol)
        if verdict.passed:
            return table.with_values(values)
        w = verdict.witness.indices
        values[w["x"], w["y"]] = 0.0


def _normalize_beta(values, t):
    """Zero every negative entry of a row with f(x, x) = 0 that is separated
    from x by a non-negative one."""
    values = values.copy()
    n = len(values)
    for i in range(n):
        if abs(values[i, i]) > t.tol:
            continue
        for step in (1, -1):
            blocked = False
            j = i + step
            while 0 <= j < n:
                if values[i, j] >= -t.tol_strict:
                    blocked = True
                elif blocked:
                    values[i, j] = 0.0
                j += step
    return values


def _not_subset(a, b, what):
    extra = sorted(set(a) - set(b))
    if extra:
        return {"claim": what, "indices": extra}
    return None


@_suite("envelope-oracles", 500)
def _envelope_oracles(seed, t):
    """Fast envelopes match the chord and level-set oracles and are idempotent."""
    rng = numpy.random.default_rng(seed)
    n = int(rng.integers(2, 65))
    grid = make_grid(-1.0, 1.0, n)
    if rng.random() < 0.5:
        values = rng.uniform(-1.0, 1.0, n)
    else:
        values = _lattice(rng, n)
    f = SampledFunction(grid, values)
    for kind, fast in _FAST_ENVELOPES:
        env = fast(f)
        oracle = envelope_oracle(f, kind)
        gap = numpy.abs(env.values - oracle.values)
        k = int(numpy.argmax(gap))
        if gap[k] > 1.0e-12:
            found = {"fast": env.values[k], "oracle": oracle.values[k]}
            return Outcome(True, {"kind": kind, "index": k, **found})
        if numpy.any(env.values > values):
            return Outcome(True, {"kind": kind, "claim": "envelope <= f"})
        if not numpy.array_equal(fast(env).values, env.values):
            return Outcome(True, {"kind": kind, "claim": "idempotence"})
    return Outcome(True)


@_suite("regularization-equality", 500)
def _regularization_equality(seed, t):
    """EP of every regularization equals EP of the table."""
    rng = numpy.random.default_rng(seed)
    grid = make_grid(0.0, 1.0, 21)
    values = rng.uniform(-1.0, 1.0, (21, 21))
    shift = rng.random(21) < 0.2
    values[shift] -= values[shift].min(axis=1, keepdims=True)
    table = ValueTable(grid, values)
    ep = solve_ep(table, t.tol)
    for kind in ("lsc", "convex", "quasiconvex"):
        ep_reg = solve_ep(regularize(table, kind, tol=t.tol), t.tol)
        if ep_reg != ep:
            return Outcome(
                not ep.is_empty,
                {"kind": kind, "EP(f)": list(ep), "EP(f_reg)": list(ep_reg)},
            )
    return Outcome(not ep.is_empty)


@_suite("monotonicity-preservation", 500)
def _monotonicity_preservation(seed, t):
    """Regularizations of a table of a monotonicity class stay in the class."""
    classes = KINDS + ("properly_quasimonotone",)
    cls = classes[seed % len(classes)]
    grid = _grid(numpy.random.default_rng(seed), 3, 12)
    table = random_bifunction(cls, seed, grid)
    for kind in ("lsc", "convex", "quasiconvex"):
        verdict = _passes(regularize(table, kind, tol=t.tol), cls, t)
        if not verdict.passed:
            witness = verdict.witness.as_dict()
            return Outcome(True, {"class": cls, "kind": kind, "witness": witness})
    return Outcome(True)


@_suite("hierarchy", 500)
def _hierarchy(seed, t):
    """monotone => pseudomonotone => quasimonotone, and a passing class forces
    a diagonal <= tol."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 2, 10)
    classes = ("unrestricted",) + KINDS + ("properly_quasimonotone",)
    table = random_bifunction(classes[seed % len(classes)], seed, grid)
    if rng.random() < 0.3:
        table = table.with_values(table.values - _perturbation(rng, len(table)))
    passing = _classes_passing(table, t)
    for a, b in zip(KINDS, KINDS[1:]):
        if passing[a] and not passing[b]:
            return Outcome(True, {"claim": f"{a} => {b}", "passing": passing})
    hit = any(passing.values())
    diagonal = table.diagonal
    if hit and diagonal.max() > t.tol:
        found = {"passing": passing, "max": diagonal.max()}
        return Outcome(True, {"claim": "diagonal <= tol", **found})
    return Outcome(hit)


@_suite("downward-closure", 500)
def _downward_closure(seed, t):
    """A class that holds for F holds for F - D when D >= 0."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 2, 10)
    classes = KINDS + ("properly_quasimonotone",)
    cls = classes[seed % len(classes)]
    table = random_bifunction(cls, seed, grid)
    lowered = table.with_values(table.values - _perturbation(rng, len(table)))
    verdict = _passes(lowered, cls, t)
    if not verdict.passed:
        return Outcome(True, {"class": cls, "witness": verdict.witness.as_dict()})
    return Outcome(True)


@_suite("pair-subset-agreement", 300)
def _pair_subset_agreement(seed, t):
    """Pair and subset methods of proper quasimonotonicity agree on small grids."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 1, 8)
    if rng.random() < 0.5:
        table = random_bifunction("properly_quasimonotone", seed, grid)
        flips = rng.random((grid.count, grid.count)) < 0.1
        table = table.with_values(numpy.where(flips, -table.values, table.values))
    else:
        table = ValueTable(grid, _lattice(rng, (grid.count, grid.count), 1.0, 1))
    pair = check_properly_quasimonotone(table, "pair", t.tol)
    subset = check_properly_quasimonotone(table, "subset", t.tol)
    if pair.passed != subset.passed:
        found = {"pair": pair.passed, "subset": subset.passed}
        return Outcome(True, {**found, "values": table.values})
    return Outcome(pair.passed)


@_suite("upper-sign-transfer", 500)
def _upper_sign_transfer(seed, t):
    """Upper sign of G passes to every F >= G, in particular to f from f_reg."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 2, 10)
    n = grid.count
    if rng.random() < 0.5:
        lower = _repair_upper_sign(ValueTable(grid, rng.uniform(-1.0, 1.0, (n, n))), t)
        table = lower.with_values(lower.values + _perturbation(rng, n))
    else:
        table = ValueTable(grid, rng.uniform(-0.2, 1.0, (n, n)))
        kind = ("lsc", "convex", "quasiconvex")[seed % 3]
        lower = regularize(table, kind, tol=t.tol)
    if not check_upper_sign(lower, tol=t.tol).passed:
        return Outcome(False)
    verdict = check_upper_sign(table, tol=t.tol)
    if not verdict.passed:
        return Outcome(True, {"witness": verdict.witness.as_dict()})
    return Outcome(True)


@_suite("cfp-subset-ep", 500)
def _cfp_subset_ep(seed, t):
    """With the upper sign property every CFP point solves EP."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 2, 12)
    n = grid.count
    values = rng.uniform(-1.0, 1.0, (n, n))
    c = int(rng.integers(n))
    values[:, c] = -numpy.abs(values[:, c])
    table = _repair_upper_sign(ValueTable(grid, values), t)
    cfp = solve_cfp(table, t.tol)
    failure = _not_subset(cfp, solve_ep(table, t.tol), "CFP <= EP")
    return Outcome(not cfp.is_empty, failure)


@_suite("local-cfp-subset-ep", 500)
def _local_cfp_subset_ep(seed, t):
    """Local upper sign and condition (beta) send local CFP points into EP."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 3, 12)
    n = grid.count
    radius = grid.spacing * int(rng.integers(1, 4))
    values = _lattice(rng, (n, n))
    c = int(rng.integers(n))
    values[:, c] = -numpy.abs(values[:, c])
    table = _repair_upper_sign(ValueTable(grid, values), t, radius)
    table = table.with_values(_normalize_beta(table.values, t))
    premise = (
        check_upper_sign(table, radius, t.tol).passed
        and check_segment_condition(table, "beta", t.tol, t.tol_strict).passed
    )
    if not premise:
        return Outcome(False)
    local = solve_cfp(table, t.tol, radius)
    failure = _not_subset(local, solve_ep(table, t.tol), "local CFP <= EP")
    return Outcome(not local.is_empty, failure)


def _spiked_spec(rng, grid, seed):
    """Bifunction of |y - x| on [0, 1] carrying isolated values at grid points."""
    p = 0.25 * int(rng.integers(0, 5))
    q = float(_lattice(rng, 1)[0])
    points = [float(z) for z in grid.points]
    branches = []
    for _ in range(int(rng.integers(1, 4))):
        ys = points[int(rng.integers(grid.count))]
        v = float(_lattice(rng, 1, levels=8)[0])
        if rng.random() < 0.5:
            xs = points[int(rng.integers(grid.count))]
            branches.append(f"if x == {xs!r} and y == {ys!r}: {v}")
        else:
            branches.append(f"if y == {ys!r}: {v}")
    branches.append(f"else: ({p}) * abs(y - x) + ({q}) * (y - x) * (y - x)")
    return BifunctionSpec("; ".join(branches), (0.0, 1.0), name=f"spiked[{seed}]")


@_suite("lsc-cfp-subset-ep", 300)
def _lsc_cfp_subset_ep(seed, t):
    """Upper sign of f_s sends CFP(f_s) into EP(f); local upper sign of f_s
    with condition (beta) sends local CFP(f_s) into EP(f)."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 3, 9)
    spec = _spiked_spec(rng, grid, seed)
    table = sample_matrix(spec, grid)
    lowered = regularize(table, "lsc", spec, t.refinement, t.tol)
    ep = solve_ep(table, t.tol)
    radius = grid.spacing * int(rng.integers(1, 3))
    hit = False
    if check_upper_sign(lowered, tol=t.tol).passed:
        hit = True
        failure = _not_subset(solve_cfp(lowered, t.tol), ep, "CFP(f_s) <= EP(f)")
        if failure is not None:
            return Outcome(True, dict(failure, spec=spec.expression))
    local = (
        check_upper_sign(lowered, radius, t.tol).passed
        and check_segment_condition(lowered, "beta", t.tol, t.tol_strict).passed
    )
    if local:
        hit = True
        failure = _not_subset(
            solve_cfp(lowered, t.tol, radius), ep, "local CFP(f_s) <= EP(f)"
        )
        if failure is not None:
            return Outcome(True, dict(failure, spec=spec.expression, radius=radius))
    return Outcome(hit)


def _unimodal_row(rng, n, lo, hi, base):
    """Strictly decreasing up to ``lo``, flat at ``base`` on [lo, hi], strictly
    increasing after ``hi``."""
    left = base + numpy.cumsum(rng.uniform(0.05, 1.0, lo))[::-1]
    right = base + numpy.cumsum(rng.uniform(0.05, 1.0, n - hi - 1))
    return numpy.concatenate([left, numpy.full(hi - lo + 1, base), right])


@_suite("sq-local-cfp-subset-ep", 500)
def _sq_local_cfp_subset_ep(seed, t):
    """Semistrictly quasiconvex f_q rows with the upper sign property send
    local CFP(f_q) into EP(f)."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 3, 12)
    n = grid.count
    c = int(rng.integers(n))
    values = numpy.empty((n, n))
    for i in range(n):
        if rng.random() < 0.85:
            lo, hi = sorted((i, c if rng.random() < 0.6 else i))
            values[i] = _unimodal_row(rng, n, lo, hi, 0.0)
        else:
            m = int(rng.integers(n))
            values[i] = _unimodal_row(rng, n, m, m, rng.uniform(-1.0, 0.5))
    if rng.random() < 0.3:
        values += _perturbation(rng, n, zero_diagonal=True)
    table = ValueTable(grid, values)
    f_q = regularize(table, "quasiconvex", tol=t.tol)
    semistrict = all(
        shape_check(f_q.row(i), "semistrictly_quasiconvex", t.tol, t.tol_strict).passed
        for i in range(n)
    )
    if not (semistrict and check_upper_sign(f_q, tol=t.tol).passed):
        return Outcome(False)
    radius = grid.spacing * int(rng.integers(1, 4))
    local = solve_cfp(f_q, t.tol, radius)
    failure = _not_subset(local, solve_ep(table, t.tol), "local CFP(f_q) <= EP(f)")
    return Outcome(not local.is_empty, failure)


@_suite("inclusion-lemma", 500)
def _inclusion_lemma(seed, t):
    """For G <= F: EP(G) is inside EP(F) and CFP(F) is inside CFP(G)."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 2, 12)
    n = grid.count
    values = _lattice(rng, (n, n)) + 0.5
    upper = ValueTable(grid, values)
    lower = upper.with_values(values - _lattice(rng, (n, n), levels=2).clip(min=0.0))
    failure = _not_subset(
        solve_ep(lower, t.tol), solve_ep(upper, t.tol), "EP(G) <= EP(F)"
    )
    if failure is None:
        failure = _not_subset(
            solve_cfp(upper, t.tol), solve_cfp(lower, t.tol), "CFP(F) <= CFP(G)"
        )
    return Outcome(True, failure)


@_suite("sq-diagonal-criterion", 500)
def _sq_diagonal_criterion(seed, t):
    """For semistrictly quasiconvex f_q rows: upper sign iff f_q(x, x) >= 0.

    Rows either have their minimum on the diagonal or a negative diagonal entry;
    on a grid these are the tables the criterion covers.
    """
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 2, 12)
    n = grid.count
    values = numpy.empty((n, n))
    for i in range(n):
        m = i if rng.random() < 0.7 else int(rng.integers(n))
        base = rng.choice([rng.uniform(-1.0, 1.0), 0.0])
        left = numpy.cumsum(rng.uniform(0.05, 1.0, m))[::-1]
        right = numpy.cumsum(rng.uniform(0.05, 1.0, n - m - 1))
        values[i] = numpy.concatenate([base + left, [base], base + right])
        if m != i:
            values[i] -= values[i, i] + rng.uniform(0.05, 1.0)
    criterion = check_semistrict_diagonal(
        ValueTable(grid, values), tol=t.tol, tol_strict=t.tol_strict
    )
    if not criterion.applies:
        return Outcome(False)
    if not criterion.holds:
        return Outcome(
            True,
            {
                "upper_sign": criterion.upper_sign.passed,
                "diagonal_min": criterion.diagonal_min,
            },
        )
    return Outcome(True)


@_suite("ky-fan-floor", 500)
def _ky_fan_floor(seed, t):
    """Quasiconvex regularized rows with zero diagonal give a Ky Fan point and
    a nonempty EP."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 2, 12)
    n = grid.count
    phi = quasiconvex_envelope(SampledFunction(grid, rng.uniform(-1.0, 1.0, n))).values
    a = rng.uniform(0.2, 2.0, n)
    values = a[:, None] * (phi[None, :] - phi[:, None])
    table = ValueTable(grid, values + _perturbation(rng, n, zero_diagonal=True))
    reg = regularize(table, "quasiconvex", tol=t.tol)
    if numpy.abs(reg.diagonal).max() > t.tol:
        return Outcome(False)
    point = ky_fan_point(reg, t.tol)
    if not point.verdict.passed:
        return Outcome(True, {"witness": point.verdict.witness.as_dict()})
    if solve_ep(reg, t.tol).is_empty or solve_ep(table, t.tol).is_empty:
        return Outcome(True, {"claim": "EP nonempty", "ky_fan": point.index})
    return Outcome(True)


@_suite("pqm-existence", 500)
def _pqm_existence(seed, t):
    """Properly quasimonotone tables of the pivot construction have CFP points."""
    rng = numpy.random.default_rng(seed)
    grid = _grid(rng, 1, 16)
    table = random_bifunction("properly_quasimonotone", seed, grid)
    if rng.random() < 0.5:
        table = table.with_values(table.values - _perturbation(rng, grid.count))
    if not check_properly_quasimonotone(table, "pair", t.tol).passed:
        return Outcome(False)
    if solve_cfp(table, t.tol).is_empty:
        return Outcome(True, {"claim": "CFP nonempty", "values": table.values})
    return Outcome(True)


@_suite("greatest-minorant", 500)
def _greatest_minorant(seed, t):
    """Every convex (quasiconvex) minorant lies below the convex (quasiconvex)
    envelope, which is itself of that shape."""
    rng = numpy.random.default_rng(seed)
    n = int(rng.integers(2, 40))
    grid = make_grid(-1.0, 1.0, n)
    f = SampledFunction(grid, rng.uniform(-1.0, 1.0, n))
    dent = f.with_values(f.values - rng.uniform(0.0, 0.5, n))
    for shape, fast in _FAST_ENVELOPES:
        env = fast(f)
        minorant = fast(dent)
        k = int(numpy.argmax(minorant.values - env.values))
        if minorant.values[k] > env.values[k] + t.tol:
            return Outcome(True, {"shape": shape, "index": k})
        verdict = shape_check(env, shape, t.tol, t.tol_strict)
        if not verdict.passed:
            return Outcome(True, {"shape": shape, "witness": verdict.witness.as_dict()})
    return Outcome(True)


@_suite("affine-minorant", 500)
def _affine_minorant(seed, t):
    """The supporting line at a grid point stays below the convex envelope and
    touches it there."""
    rng = numpy.random.default_rng(seed)
    n = int(rng.integers(2, 40))
    grid = make_grid(-1.0, 1.0, n)
    f = SampledFunction(grid, rng.uniform(-1.0, 1.0, n))
    env = convex_envelope(f).values
    at = int(rng.integers(n))
    line = affine_minorant(f, at)(grid.points)
    if numpy.any(line > env + t.tol) or abs(line[at] - env[at]) > t.tol:
        return Outcome(True, {"at": at, "slope": affine_minorant(f, at).slope})
    return Outcome(True)


_COERCIVE_SPECS = (
    "example-1-f1",
    "example-1-f2",
    "one-over-y",
    "linear-ascent",
    "linear-descent",
)


@_suite("coercivity-chain", 40)
def _coercivity_chain(seed, t):
    """C1 => C2 => C3 direction by direction, on builtin and random bilinear specs."""
    if seed % 2 == 0:
        name = _COERCIVE_SPECS[(seed // 2) % len(_COERCIVE_SPECS)]
        spec = builtin_spec(name)
    else:
        rng = numpy.random.default_rng(seed)
        a, b, c = _lattice(rng, 3)
        spec = BifunctionSpec(
            f"({a}) * y + ({b}) * x + ({c}) * x * y",
            (0.0, numpy.inf),
            name=f"bilinear[{seed}]",
        )
    lower, upper = spec.domain
    schedule = TruncationSchedule(lower, upper, 0.125, 1, 6)
    reports = [
        check_coercivity(spec, schedule, k, tol=t.tol, refinement=t.refinement)
        for k in ("C1", "C2", "C3")
    ]
    for sigma in schedule.directions:
        passed = [r.directions[sigma].passed for r in reports]
        if (passed[0] and not passed[1]) or (passed[1] and not passed[2]):
            found = {"direction": sigma, "C1-C3": passed}
            return Outcome(True, {"spec": spec.name, **found})
    return Outcome(True)


@_suite("fixtures", len(FIXTURES))
def _fixtures(seed, t):
    """Every builtin example meets its expectations."""
    names = sorted(FIXTURES)
    name = names[seed % len(names)]
    report = run_example(name, t)
    if not report.passed:
        failed = [c.name for c in report.failures]
        return Outcome(True, {"example": name, "failed": failed})
    return Outcome(True)


def suite_names():
    return sorted(SUITES)


def run_suite(names=None, instances=None, seed=0, tolerances=None, timing=False):
    """Run the selected suites and collect one check result per suite.

    Parameters
    ----------
    names : list of str, optional
        Suites to run; all of them by default.
    instances : int, optional
        Instances per suite, overriding each suite's default count.
    seed : int
        Base seed; instance k uses ``seed + k``.
    tolerances : Tolerances, optional
    timing : bool
        Record wall times, which makes reports differ between runs.
    """
    names = suite_names() if not names else list(names)
    unknown = sorted(set(names) - set(SUITES))
    if unknown:
        raise UsageError(f"unknown suites {unknown}; choose from {suite_names()}")
    if instances is not None and instances < 1:
        raise UsageError(f"instances must be positive, got {instances}")
    t = tolerances or Tolerances()

    report = SuiteReport(
        "suite",
        inputs={"suites": names, "instances": instances, "seed": seed, **t.as_dict()},
        seeds=[seed],
    )
    start = time.perf_counter()
    for name in names:
        suite = SUITES[name]
        count = suite.instances if instances is None else instances
        hits = 0
        failures = []
        seeds = []
        suite_start = time.perf_counter()
        for k in range(count):
            outcome = suite.run(seed + k, t)
            hits += outcome.hit
            if outcome.failure is not None:
                seeds.append(seed + k)
                if len(failures) < MAX_RECORDED_FAILURES:
                    failures.append({"seed": seed + k, "witness": outcome.failure})
        check = CheckResult(
            name,
            not seeds,
            instances=count,
            premise_hits=hits,
            seeds=seeds,
            failures=failures,
            provenance=suite.description,
        )
        if timing:
            check.wall_time = time.perf_counter() - suite_start
        report.add(check)
        level = logging.INFO if check.passed else logging.WARNING
        logger.log(
            level, "suite %s: %d instances, %d premise hits, %d failures",
            name, count, hits, len(seeds),
        )
    if timing:
        report.wall_time = time.perf_counter() - start
    return report
