from dataclasses import dataclass
from typing import Optional

import numpy

from .._verdict import Verdict
from ..bifunction import regularize
from ..envelope import shape_check
from ..helpers import REFINEMENT, TOL, TOL_STRICT
from .upper_sign import check_upper_sign


@dataclass(frozen=True)
class DiagonalCriterion:
    """Both sides of "f_q has the upper sign property iff f_q(x,x) >= 0".

    The equivalence is only claimed when every regularized row is
    semistrictly quasiconvex, i.e. when ``semistrict`` is None.
    """

    semistrict: Optional[Verdict]
    upper_sign: Verdict
    diagonal_nonnegative: bool
    diagonal_min: float

    @property
    def applies(self):
        return self.semistrict is None

    @property
    def holds(self):
        return self.upper_sign.passed == self.diagonal_nonnegative


def check_semistrict_diagonal(
    table, source=None, tol=TOL, tol_strict=TOL_STRICT, refinement=REFINEMENT
):
    regularized = regularize(table, "quasiconvex", source, refinement, tol)
    failed = None
    for i in range(len(regularized)):
        verdict = shape_check(
            regularized.row(i), "semistrictly_quasiconvex", tol, tol_strict
        )
        if not verdict.passed:
            failed = verdict
            break
    diagonal = regularized.diagonal
    return DiagonalCriterion(
        failed,
        check_upper_sign(regularized, tol=tol),
        bool(numpy.all(diagonal >= -tol)),
        float(diagonal.min()),
    )
