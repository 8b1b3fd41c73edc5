import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy

from .._exceptions import UsageError
from ..domain import truncation_grid
from ..envelope import SampledFunction, envelope_rows, lsc_rows, shape_check
from ..helpers import REFINEMENT, TOL, TOL_STRICT

logger = logging.getLogger(__name__)

MEMBER = "member"
NOT_MEMBER = "not-member"
COMPACT_MEMBER = "member-on-compact-truncations"
_RANK = {NOT_MEMBER: 0, COMPACT_MEMBER: 1, MEMBER: 2}

FAMILIES = ("C", "Q", "Cbar", "Qbar", "S", "SQ", "SQbar")
# (smaller, larger) family pairs of the inclusion chain
INCLUSIONS = (
    ("C", "Q"),
    ("Cbar", "Qbar"),
    ("Qbar", "S"),
    ("SQ", "Q"),
    ("SQbar", "Qbar"),
)


@dataclass
class FamilyVerdict:
    family: str
    verdict: str
    trajectory: List[Tuple[int, float]] = field(default_factory=list)
    probe: float = math.nan
    note: str = ""

    def as_dict(self):
        return {
            "family": self.family,
            "verdict": self.verdict,
            "trajectory": [[n, v] for n, v in self.trajectory],
            "probe": self.probe,
            "note": self.note,
        }


class FamilyReport:
    def __init__(self, verdicts: Dict[str, FamilyVerdict]):
        self.verdicts = verdicts

    def __repr__(self):
        tags = ", ".join(f"{k}={v.verdict}" for k, v in self.verdicts.items())
        return f"<eqreg FamilyReport object, {tags}>"

    def __getitem__(self, family):
        return self.verdicts[family]

    def is_member(self, family):
        return self.verdicts[family].verdict == MEMBER

    def is_not_member(self, family):
        return self.verdicts[family].verdict == NOT_MEMBER

    def as_dict(self):
        return {k: v.as_dict() for k, v in self.verdicts.items()}


def _level_envelopes(spec, probes, grid, refinement, tol):
    raw = spec.values(probes[:, None], grid.points[None, :])
    closed = lsc_rows(
        raw,
        grid,
        lambda y: spec.values(probes[:, None], y[None, :]),
        refinement,
        tol,
    )
    return {
        "C": envelope_rows(raw, grid, "convex"),
        "Q": envelope_rows(raw, grid, "quasiconvex"),
        "Cbar": envelope_rows(closed, grid, "convex_closed"),
        "Qbar": envelope_rows(closed, grid, "quasiconvex_closed"),
        "S": closed,
    }


def _semistrict_rows(grid, rows, tol, tol_strict):
    for r in rows:
        verdict = shape_check(
            SampledFunction(grid, r), "semistrictly_quasiconvex", tol, tol_strict
        )
        if not verdict.passed:
            return verdict
    return None


def _judge(trajectory, bound, tol, divergence_exponent):
    levels = [n for n, _ in trajectory]
    values = [v for _, v in trajectory]
    if min(values) < -bound:
        return NOT_MEMBER, f"fell below -{bound:g}"
    if len(values) >= 2 and abs(values[-1] - values[-2]) < tol:
        return MEMBER, "stabilized"
    if len(values) >= 3:
        d_prev = values[-3] - values[-2]
        d_last = values[-2] - values[-1]
        if d_prev > tol and d_last > tol:
            p = math.log(d_prev / d_last) / math.log(levels[-1] / levels[-2])
            if p <= divergence_exponent:
                return NOT_MEMBER, f"drops decay like n^-{p:.3g}, divergent"
            return COMPACT_MEMBER, f"drops decay like n^-{p:.3g}, converging"
    return COMPACT_MEMBER, "no stabilization over the schedule"


def classify_families(
    spec,
    schedule,
    probes=None,
    bound=1.0e3,
    tol=TOL,
    tol_strict=TOL_STRICT,
    refinement=REFINEMENT,
    divergence_exponent=1.5,
):
    """Classify a bifunction into the families C, Q, Cbar, Qbar, S, SQ, SQbar.

    For every truncation K_n of the schedule the regularizations of the probe
    rows ``f(p, .)`` are computed on K_n and their minimum over the points of
    the coarsest truncation is recorded. A family is a member when this value
    stabilizes and not a member when it falls below ``-bound`` or keeps
    dropping at the rate of a divergent series.

    Parameters
    ----------
    spec : BifunctionSpec
    schedule : TruncationSchedule
    probes : array_like, optional
        Points x in K; defaults to the grid of the coarsest truncation.
    bound : float
        Divergence bound M.
    """
    if bound <= 0:
        raise UsageError(f"divergence bound must be positive, got {bound}")
    levels = schedule.levels
    if len(levels) == 0:
        raise UsageError("empty schedule")
    coarse = truncation_grid(schedule, levels[0])
    if probes is None:
        probes = coarse.points
    probes = numpy.asarray(probes, dtype=float).ravel()
    if len(probes) == 0:
        raise UsageError("no probe points")

    trajectories = {f: [] for f in ("C", "Q", "Cbar", "Qbar", "S")}
    argmin_probe = {}
    semistrict = {"SQ": None, "SQbar": None}
    for n in levels:
        grid = truncation_grid(schedule, n)
        at = grid.indices_of(coarse.points)
        envelopes = _level_envelopes(spec, probes, grid, refinement, tol)
        for family, env in envelopes.items():
            window = env[:, at]
            k = int(numpy.argmin(window.min(axis=1)))
            trajectories[family].append((n, float(window.min())))
            argmin_probe[family] = float(probes[k])
        for family, base in (("SQ", "Q"), ("SQbar", "Qbar")):
            if semistrict[family] is None:
                semistrict[family] = _semistrict_rows(
                    grid, envelopes[base], tol, tol_strict
                )
        logger.debug(
            "level %d: %s",
            n,
            ", ".join(f"{f}={trajectories[f][-1][1]:.6g}" for f in trajectories),
        )

    verdicts = {}
    for family, trajectory in trajectories.items():
        verdict, note = _judge(trajectory, bound, tol, divergence_exponent)
        verdicts[family] = FamilyVerdict(
            family, verdict, trajectory, argmin_probe[family], note
        )
    for family, base in (("SQ", "Q"), ("SQbar", "Qbar")):
        failed = semistrict[family]
        if failed is None:
            verdicts[family] = FamilyVerdict(
                family,
                verdicts[base].verdict,
                verdicts[base].trajectory,
                verdicts[base].probe,
                f"semistrictly quasiconvex rows; {verdicts[base].note}",
            )
        else:
            w = failed.witness
            verdicts[family] = FamilyVerdict(
                family,
                NOT_MEMBER,
                verdicts[base].trajectory,
                verdicts[base].probe,
                f"row not semistrictly quasiconvex at y = {w.points['k']}",
            )

    _reconcile(verdicts)
    for family in FAMILIES:
        if verdicts[family].verdict == NOT_MEMBER:
            logger.info(
                "%s: not a member of %s (%s)", spec.name, family, verdicts[family].note
            )
    return FamilyReport({f: verdicts[f] for f in FAMILIES})


def _reconcile(verdicts):
    # a smaller family never ranks above the larger one
    changed = True
    while changed:
        changed = False
        for small, large in INCLUSIONS:
            if _RANK[verdicts[small].verdict] > _RANK[verdicts[large].verdict]:
                logger.warning(
                    "lowering %s to %s to respect %s within %s",
                    small,
                    verdicts[large].verdict,
                    small,
                    large,
                )
                verdicts[small].verdict = verdicts[large].verdict
                verdicts[small].note += f"; bounded by {large}"
                changed = True
