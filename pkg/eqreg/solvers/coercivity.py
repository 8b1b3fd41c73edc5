import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy

from .._exceptions import ConfigurationError, UsageError
from ..bifunction import regularize, sample_matrix
from ..domain import truncation_grid
from ..envelope import EnvelopeKind
from ..helpers import REFINEMENT, TOL

logger = logging.getLogger(__name__)

CONDITIONS = ("C1", "C2", "C3")


@dataclass
class DirectionVerdict:
    direction: int
    passed: bool
    n0: Optional[int] = None
    u: Optional[float] = None
    trajectory: List[Tuple[int, float]] = field(default_factory=list)
    note: str = ""

    def as_dict(self):
        return {
            "direction": self.direction,
            "passed": self.passed,
            "n0": self.n0,
            "u": self.u,
            "trajectory": [[n, v] for n, v in self.trajectory],
            "note": self.note,
        }


@dataclass
class CoercivityReport:
    kind: str
    directions: Dict[int, DirectionVerdict]
    regularization: Optional[str] = None

    @property
    def passed(self):
        return all(d.passed for d in self.directions.values())

    def __repr__(self):
        tags = ", ".join(
            f"{'+' if s > 0 else '-'}:{'pass' if d.passed else 'fail'}"
            for s, d in self.directions.items()
        )
        return f"<eqreg CoercivityReport object, {self.kind}, {tags}>"

    def as_dict(self):
        return {
            "kind": self.kind,
            "passed": self.passed,
            "regularization": self.regularization,
            "directions": {str(s): d.as_dict() for s, d in self.directions.items()},
        }


def _c1(f, x, tail_of, anchors, levels, tol, sigma):
    trajectory = []
    for n0 in levels:
        tail = tail_of(n0)
        if len(tail) == 0:
            continue
        worst = f[numpy.ix_(tail, anchors)].max(axis=0)
        trajectory.append((n0, float(worst.min())))
        ok = anchors[worst <= tol]
        if len(ok) > 0:
            u = int(ok[numpy.argmin(numpy.abs(x[ok]))])
            return DirectionVerdict(sigma, True, n0, float(x[u]), trajectory)
    return DirectionVerdict(sigma, False, None, None, trajectory, "no fixed u works")


def _c2(f, x, tail_of, levels, tol, sigma, h):
    trajectory = []
    inner = numpy.abs(x)[None, :] < numpy.abs(x)[:, None] - h / 2
    for n0 in levels:
        tail = tail_of(n0)
        if len(tail) == 0:
            continue
        best = numpy.where(inner[tail], f[tail], numpy.inf).min(axis=1)
        trajectory.append((n0, float(best.max())))
        if numpy.all(best <= tol):
            k = tail[0]
            u = int(numpy.flatnonzero(inner[k] & (f[k] <= tol))[0])
            return DirectionVerdict(sigma, True, n0, float(x[u]), trajectory)
    return DirectionVerdict(
        sigma, False, None, None, trajectory, "escaping points without a better u"
    )


def check_coercivity(
    spec, schedule, kind, regularization=None, tol=TOL, refinement=REFINEMENT
):
    """Direction-wise coercivity conditions (C1), (C2), (C3) on the finest truncation.

    For an escape direction sigma of K and a level n0, the tail is the set of grid
    points x of K_{n_max} with sigma * x > n0 + h/2. Levels with an empty tail are
    skipped; a schedule so coarse that every tail is empty is rejected.

    - C1: some u of the coarsest truncation has f(x, u) <= tol on a tail.
    - C2: on some tail every x admits u with |u| < |x| and f(x, u) <= tol.
    - C3: if f(y, y + sigma) <= tol for every grid y, the C2 tail condition is
      required in direction sigma; otherwise the direction passes vacuously.
      y + sigma must be a grid point, so C3 needs 1/h to be an integer.

    Raises
    ------
    UsageError
        Unknown condition, bounded K, or fewer than 3 levels.
    ConfigurationError
        Every tail is empty, or C3 with 1/h not an integer.
    """
    if kind not in CONDITIONS:
        raise UsageError(
            f"unknown coercivity condition {kind!r}; choose from {CONDITIONS}"
        )
    if schedule.is_bounded:
        raise UsageError("coercivity is defined for unbounded K only")
    if len(schedule.levels) < 3:
        raise UsageError("coercivity checks need a schedule with at least 3 levels")
    h = schedule.spacing
    steps = round(1.0 / h)
    if kind == "C3" and (steps < 1 or abs(steps * h - 1.0) > 1.0e-9):
        raise ConfigurationError(f"C3 needs 1/h to be an integer, got h = {h}")

    grid = truncation_grid(schedule, schedule.n_max)
    x = grid.points
    levels = schedule.levels[:-1]
    for sigma in schedule.directions:
        if not numpy.any(sigma * x > levels[0] + h / 2):
            raise ConfigurationError(
                f"schedule too coarse: no grid point of K_{schedule.n_max} lies "
                f"beyond n0 = {levels[0]} in direction {sigma:+d}"
            )

    table = sample_matrix(spec, grid)
    if regularization is not None:
        table = regularize(
            table, regularization, source=spec, refinement=refinement, tol=tol
        )
    f = table.values
    anchors = grid.indices_of(truncation_grid(schedule, schedule.n_min).points)

    directions = {}
    for sigma in schedule.directions:

        def tail_of(n0, sigma=sigma):
            return numpy.flatnonzero(sigma * x > n0 + h / 2)

        if kind == "C1":
            verdict = _c1(f, x, tail_of, anchors, levels, tol, sigma)
        elif kind == "C2":
            verdict = _c2(f, x, tail_of, levels, tol, sigma, h)
        else:
            shift = sigma * steps
            lo, hi = max(0, -shift), min(len(x), len(x) - shift)
            ys = numpy.arange(lo, hi)
            premise = bool(numpy.all(f[ys, ys + shift] <= tol))
            if premise:
                verdict = _c2(f, x, tail_of, levels, tol, sigma, h)
                verdict.note = "premise holds; " + verdict.note
            else:
                verdict = DirectionVerdict(sigma, True, note="premise fails, vacuous")
        directions[sigma] = verdict
        logger.debug("%s %s direction %+d: %s", spec.name, kind, sigma, verdict.passed)

    return CoercivityReport(
        kind,
        directions,
        None if regularization is None else EnvelopeKind.parse(regularization).value,
    )
