import logging

import numpy

from .._exceptions import ConfigurationError, EvaluationError
from ..helpers import REFINEMENT, TOL
from .sampled import SampledFunction

logger = logging.getLogger(__name__)


def jump_limits(center, near, far, tol=TOL):
    """One-sided limits at points where a function jumps down.

    ``near`` and ``far`` are values at distance δ and 2δ on one side of the point
    whose value is ``center``. The linear extrapolation ``2 near - far`` is
    returned where it lies below ``center`` by more than the local variation;
    elsewhere the result is +inf (no downward jump).
    """
    center = numpy.asarray(center, dtype=float)
    near = numpy.asarray(near, dtype=float)
    far = numpy.asarray(far, dtype=float)
    with numpy.errstate(invalid="ignore"):
        limit = 2.0 * near - far
        drop = center - limit
        accept = numpy.isfinite(limit) & (drop > 4.0 * numpy.abs(near - far) + tol)
    return numpy.where(accept, limit, numpy.inf)


def probe_offsets(grid, refinement=REFINEMENT):
    """Probe abscissas left and right of every grid point, +-δ and +-2δ with
    δ = h / refinement. Probes falling outside the grid interval are NaN."""
    if int(refinement) != refinement or refinement < 1:
        raise ConfigurationError(
            f"refinement must be a positive integer, got {refinement}"
        )
    x = grid.points
    if grid.count < 2:
        nan = numpy.full(x.shape, numpy.nan)
        return nan, nan, nan, nan
    delta = grid.spacing / refinement
    eps = 1.0e-12 * max(1.0, abs(grid.lower), abs(grid.upper))

    def inside(p):
        ok = (p >= grid.lower - eps) & (p <= grid.upper + eps)
        return numpy.where(ok, p, numpy.nan)

    return (
        inside(x - delta),
        inside(x - 2 * delta),
        inside(x + delta),
        inside(x + 2 * delta),
    )


def _evaluate(source, points, what):
    vals = numpy.asarray(source(points), dtype=float)
    bad = numpy.argwhere(~numpy.isfinite(vals))
    if len(bad) > 0:
        y = float(points[bad[0][-1]])
        raise EvaluationError(f"non-finite value {what}", y=y)
    return numpy.broadcast_to(vals, numpy.broadcast(vals, points).shape)


def _evaluate_probes(source, probes, shape):
    out = numpy.full(shape, numpy.nan)
    ok = ~numpy.isnan(probes)
    if numpy.any(ok):
        out[..., ok] = _evaluate(source, probes[ok], "inside a probe window")
    return out


def one_sided_limits(source, grid, refinement=REFINEMENT, tol=TOL, center=None):
    """Left and right downward-jump limits of ``source`` at the grid points.

    Parameters
    ----------
    source : callable
        Vectorized in y, ``source(ndarray) -> ndarray``. A source returning an
        array of shape ``(m, len(y))`` stands for m rows probed together.
    grid : eqreg.domain.Grid
    center : array_like, optional
        Values at the grid points; evaluated from ``source`` when omitted.

    Returns
    -------
    left, right : ndarray
        Limit estimates, +inf where the function does not jump down.
    """
    if center is None:
        center = _evaluate(source, grid.points.copy(), "at a grid point")
    center = numpy.asarray(center, dtype=float)
    left1, left2, right1, right2 = probe_offsets(grid, refinement)
    left = jump_limits(
        center,
        _evaluate_probes(source, left1, center.shape),
        _evaluate_probes(source, left2, center.shape),
        tol,
    )
    right = jump_limits(
        center,
        _evaluate_probes(source, right1, center.shape),
        _evaluate_probes(source, right2, center.shape),
        tol,
    )
    return left, right


def lsc_rows(values, grid, source, refinement=REFINEMENT, tol=TOL):
    """Lower every row of ``values`` to the one-sided limits of ``source``.

    ``values[i]`` are the samples of row i at the grid and ``source(y)`` returns
    all rows at the abscissas ``y``, shape ``(len(values), len(y))``.
    """
    values = numpy.asarray(values, dtype=float)
    left, right = one_sided_limits(source, grid, refinement, tol, center=values)
    out = numpy.minimum(values, numpy.minimum(left, right))
    n_jumps = int(numpy.count_nonzero(out < values))
    if n_jumps:
        logger.debug("lsc rows: %d of %d samples lowered", n_jumps, values.size)
    return out


def lsc_envelope(f, grid=None, refinement=REFINEMENT, tol=TOL):
    """Lower semicontinuous envelope on a grid.

    For sampled input the envelope is the input itself, since isolated samples
    are closed. For an evaluable ``f`` the value at each grid point is the
    minimum of ``f`` there and its one-sided limits, estimated by probing at
    resolution ``h / refinement``.
    """
    if isinstance(f, SampledFunction):
        return f.with_values(f.values.copy())
    if grid is None:
        raise ConfigurationError("an evaluable function needs a grid")
    values = _evaluate(f, grid.points.copy(), "at a grid point")
    return SampledFunction(grid, lsc_rows(values, grid, f, refinement, tol))
