from dataclasses import dataclass

import numpy

from .._exceptions import ConfigurationError
from ..domain import require_finite

# Relative size of a hull/sample gap treated as rounding noise.
_NOISE = 64 * numpy.finfo(float).eps


@dataclass(frozen=True)
class AffineMinorant:
    slope: float
    intercept: float

    def __call__(self, y):
        return self.slope * numpy.asarray(y, dtype=float) + self.intercept


def lower_hull(x, v):
    """Vertex indices of the lower convex hull of the points (x[k], v[k]).

    Monotone chain over abscissas that are already sorted; collinear points are
    dropped.
    """
    hull = []
    for k in range(len(x)):
        while len(hull) >= 2:
            o, a = hull[-2], hull[-1]
            cross = (x[a] - x[o]) * (v[k] - v[o]) - (v[a] - v[o]) * (x[k] - x[o])
            if cross > 0.0:
                break
            hull.pop()
        hull.append(k)
    return numpy.array(hull, dtype=int)


def _hull_values(x, v):
    hull = lower_hull(x, v)
    return hull, numpy.interp(x, x[hull], v[hull])


def convex_envelope(f):
    """Greatest convex function below the samples of ``f``.

    The piecewise linear lower hull of the points (x_i, f_i), evaluated at the
    grid. Samples closer to the hull than rounding noise are left untouched, so
    the operator is idempotent.
    """
    v = require_finite(f.values, "convex envelope input")
    if len(v) < 2:
        return f.with_values(v.copy())
    _, hull = _hull_values(f.x, v)
    noise = _NOISE * (1.0 + numpy.abs(v))
    return f.with_values(numpy.where(hull < v - noise, hull, v))


def affine_minorant(f, at):
    """Supporting line of the convex envelope of ``f`` at grid index ``at``.

    The slope is the least-norm element of the discrete subdifferential, the
    interval between the slopes of the hull edges meeting at ``x_at``. At the
    ends of the grid the subdifferential is unbounded on the outer side.
    """
    v = require_finite(f.values, "affine minorant input")
    if len(v) < 2:
        raise ConfigurationError("affine minorant needs a grid with at least 2 points")
    at = int(at)
    if not 0 <= at < len(v):
        raise ConfigurationError(f"index {at} out of range for {len(v)} points")

    x = f.x
    hull, g = _hull_values(x, v)
    pos = numpy.searchsorted(hull, at)
    if pos < len(hull) and hull[pos] == at:
        lo = -numpy.inf
        hi = numpy.inf
        if pos > 0:
            a = hull[pos - 1]
            lo = (g[at] - g[a]) / (x[at] - x[a])
        if pos < len(hull) - 1:
            b = hull[pos + 1]
            hi = (g[b] - g[at]) / (x[b] - x[at])
        slope = float(numpy.clip(0.0, lo, hi))
    else:
        a = hull[pos - 1]
        b = hull[pos]
        slope = float((g[b] - g[a]) / (x[b] - x[a]))
    return AffineMinorant(slope, float(g[at] - slope * x[at]))

