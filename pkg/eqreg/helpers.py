import numpy

from ._exceptions import ConfigurationError

TOL = 1.0e-9
TOL_STRICT = 1.0e-12
REFINEMENT = 16


class Tolerances:
    """Comparison tolerances shared by envelopes, checkers and solvers.

    Non-strict comparisons ``a <= b`` read ``a <= b + tol``; strict comparisons
    ``a < b`` read ``a < b - tol_strict``.
    """

    def __init__(self, tol=TOL, tol_strict=TOL_STRICT, refinement=REFINEMENT):
        if not tol >= 0.0 or not tol_strict >= 0.0:
            raise ConfigurationError(
                f"tolerances must be nonnegative, got {tol}, {tol_strict}"
            )
        if tol_strict > tol:
            raise ConfigurationError(
                f"tol_strict ({tol_strict}) must not exceed tol ({tol})"
            )
        if int(refinement) != refinement or refinement < 1:
            raise ConfigurationError("refinement must be a positive integer")
        self.tol = float(tol)
        self.tol_strict = float(tol_strict)
        self.refinement = int(refinement)

    def __repr__(self):
        return (
            f"<eqreg Tolerances object, tol={self.tol}, "
            f"tol_strict={self.tol_strict}, refinement={self.refinement}>"
        )

    def as_dict(self):
        return {"tol": self.tol, "tol_strict": self.tol_strict}


def first_true(mask):
    """Index of the first True entry of a boolean array, or None."""
    idx = numpy.flatnonzero(mask)
    return int(idx[0]) if len(idx) > 0 else None


def last_true(mask):
    idx = numpy.flatnonzero(mask)
    return int(idx[-1]) if len(idx) > 0 else None
