"""Extended reals are plain float64 values with ``numpy.inf`` standing for +∞.

+∞ marks points outside a function's domain. −∞ is never accepted as input; it
appears only in divergence reports of family classification.
"""
import numpy

from .._exceptions import DomainError

POS_INF = numpy.inf
NEG_INF = -numpy.inf


def as_extended(values):
    values = numpy.asarray(values, dtype=float)
    if numpy.any(numpy.isnan(values)):
        raise DomainError("NaN is not an extended real")
    if numpy.any(values == NEG_INF):
        raise DomainError("-inf is not accepted as a function value")
    return values


def require_finite(values, what="values"):
    values = numpy.asarray(values, dtype=float)
    bad = numpy.flatnonzero(~numpy.isfinite(values))
    if len(bad) > 0:
        k = int(bad[0])
        raise DomainError(
            f"{what} must be finite, found {values.flat[k]} at index {k}"
        )
    return values
