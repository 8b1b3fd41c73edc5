import numpy

from ..domain import require_finite


def running_minima(values):
    """Minimum over ``values[:k+1]`` and over ``values[k:]`` for every k."""
    left = numpy.minimum.accumulate(values)
    right = numpy.minimum.accumulate(values[::-1])[::-1]
    return left, right


def quasiconvex_envelope(f):
    """Greatest quasiconvex function below the samples of ``f``.

    In one dimension the convex hull of a lower level set is the interval
    between its extreme points, so the envelope at x_k is the larger of the
    running minima to the left and to the right of k.
    """
    v = require_finite(f.values, "quasiconvex envelope input")
    left, right = running_minima(v)
    return f.with_values(numpy.minimum(numpy.maximum(left, right), v))


def level_set(f, level, tol=0.0):
    """Indices of the lower level set {k : f_k <= level}."""
    return numpy.flatnonzero(numpy.asarray(f.values) <= level + tol)


def level_set_hull(f, level, tol=0.0):
    """Index interval [min S, max S] spanned by the lower level set, or None."""
    idx = level_set(f, level, tol)
    if len(idx) == 0:
        return None
    return int(idx[0]), int(idx[-1])
