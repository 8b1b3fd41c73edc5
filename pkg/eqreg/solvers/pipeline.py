import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .._exceptions import ConfigurationError, UsageError
from ..bifunction import regularize, sample_matrix
from ..domain import truncation_grid
from ..envelope import shape_check
from ..helpers import REFINEMENT, TOL, TOL_STRICT
from ..properties import (
    check_monotonicity,
    check_properly_quasimonotone,
    check_segment_condition,
    check_upper_sign,
)
from .coercivity import check_coercivity
from .problems import extend_from_truncation, ky_fan_point, solve_cfp, solve_ep
from .solution_set import SolutionSet

logger = logging.getLogger(__name__)

VARIANTS = ("C2", "C3")


@dataclass
class LevelRecord:
    level: int
    solutions: SolutionSet
    interior: List[bool]
    checks: Dict[str, bool]
    candidate: Optional[float] = None
    escape: Optional[float] = None
    note: str = ""

    def as_dict(self):
        return {
            "level": self.level,
            "solutions": self.solutions.as_dict(),
            "interior": self.interior,
            "checks": dict(sorted(self.checks.items())),
            "candidate": self.candidate,
            "escape": self.escape,
            "note": self.note,
        }


@dataclass
class PipelineResult:
    variant: str
    outcome: str
    point: Optional[float] = None
    level: Optional[int] = None
    escape: Optional[float] = None
    levels: List[LevelRecord] = field(default_factory=list)
    diagnostics: Dict[str, object] = field(default_factory=dict)

    @property
    def found(self):
        return self.outcome == "solution"

    def __repr__(self):
        if self.found:
            return (
                f"<eqreg PipelineResult object, {self.variant}, "
                f"solution x={self.point} at n={self.level}>"
            )
        return f"<eqreg PipelineResult object, {self.variant}, exhausted>"

    def as_dict(self):
        return {
            "variant": self.variant,
            "outcome": self.outcome,
            "point": self.point,
            "level": self.level,
            "escape": self.escape,
            "levels": [r.as_dict() for r in self.levels],
            "diagnostics": self.diagnostics,
        }


def _rows_semistrict(table, tol, tol_strict):
    return all(
        shape_check(table.row(i), "semistrictly_quasiconvex", tol, tol_strict).passed
        for i in range(len(table))
    )


def _c2_level(table, spec, tol, tol_strict, refinement):
    reg = regularize(table, "quasiconvex", spec, refinement, tol)
    checks = {
        "semistrictly_quasiconvex": _rows_semistrict(reg, tol, tol_strict),
        "zero_diagonal": bool(abs(reg.diagonal).max() <= tol),
        "ky_fan": ky_fan_point(reg, tol).verdict.passed,
        "alpha": check_segment_condition(reg, "alpha", tol, tol_strict).passed,
    }
    return reg, solve_ep(reg, tol), checks, ""


def _c3_level(table, spec, tol, tol_strict, refinement):
    reg = regularize(table, "quasiconvex_closed", spec, refinement, tol)
    checks = {
        "quasimonotone": check_monotonicity(
            reg, "quasimonotone", tol, tol_strict
        ).passed,
        "upper_sign": check_upper_sign(reg, tol=tol).passed,
        "properly_quasimonotone": check_properly_quasimonotone(reg, "pair", tol).passed,
        "semistrictly_quasiconvex": _rows_semistrict(reg, tol, tol_strict),
    }
    note = ""
    if not checks["properly_quasimonotone"]:
        note = "not properly quasimonotone: that branch is unverifiable, CFP path only"
        logger.warning(note)
    cfp = solve_cfp(reg, tol)
    if not checks["upper_sign"]:
        note = (note + "; " if note else "") + "no upper sign: CFP points not certified"
    return reg, cfp, checks, note


def existence_pipeline(
    spec, schedule, variant, tol=TOL, tol_strict=TOL_STRICT, refinement=REFINEMENT
):
    """Search for an EP solution on unbounded K through truncations K_n.

    variant ``"C2"`` solves EP of the quasiconvex regularization on each K_n;
    variant ``"C3"`` solves CFP of the closed quasiconvex regularization and
    relies on its upper sign property. A truncation solution x is accepted when
    some interior y has f_reg(x, y) <= tol and x solves EP of the original
    bifunction on the finest truncation.
    """
    if variant not in VARIANTS:
        raise UsageError(
            f"unknown pipeline variant {variant!r}; choose from {VARIANTS}"
        )
    if schedule.is_bounded:
        raise UsageError("existence pipelines need an unbounded domain")

    finest = truncation_grid(schedule, schedule.n_max)
    reference = solve_ep(sample_matrix(spec, finest), tol)
    step = _c2_level if variant == "C2" else _c3_level

    records = []
    for n in schedule.levels:
        grid = truncation_grid(schedule, n)
        table = sample_matrix(spec, grid)
        reg, solutions, checks, note = step(table, spec, tol, tol_strict, refinement)
        interior = [bool(grid.interior[i]) for i in solutions]
        record = LevelRecord(n, solutions, interior, checks, note=note)
        records.append(record)

        certified = variant == "C2" or checks["upper_sign"]
        order = sorted(solutions, key=lambda i: (not grid.interior[i], i))
        for i in order if certified else []:
            y = extend_from_truncation(reg, i, grid.interior, tol)
            if y is None:
                continue
            point = float(grid.points[i])
            if finest.index_of(point) not in reference:
                record.note = (record.note + "; " if record.note else "") + (
                    f"x = {point} rejected by re-verification"
                )
                continue
            record.candidate = point
            record.escape = float(grid.points[y])
            logger.info(
                "%s %s: solution x = %g at n = %d", spec.name, variant, point, n
            )
            return PipelineResult(variant, "solution", point, n, record.escape, records)
        logger.debug(
            "%s %s: level %d gives no escaping solution", spec.name, variant, n
        )

    failing = sorted({k for r in records for k, ok in r.checks.items() if not ok})
    diagnostics = {"failed_checks": failing}
    if len(schedule.levels) >= 3:
        regularization = "quasiconvex" if variant == "C2" else "quasiconvex_closed"
        try:
            report = check_coercivity(
                spec, schedule, variant, regularization, tol=tol, refinement=refinement
            )
            diagnostics["coercivity"] = report.as_dict()
        except ConfigurationError as err:
            diagnostics["coercivity"] = {"kind": variant, "error": str(err)}
    logger.info("%s %s: exhausted, failing checks %s", spec.name, variant, failing)
    return PipelineResult(variant, "exhausted", levels=records, diagnostics=diagnostics)
