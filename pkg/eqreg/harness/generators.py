"""Random tables from the classes the theorems are stated for.

Every generator is a pure function of its seed. Classes that have a closed-form
construction are exact by construction; the others are repaired and then
verified against the checkers, retrying with a derived seed.
"""
import logging

import numpy

from .._exceptions import GenerationError, UsageError
from ..bifunction import ValueTable
from ..envelope import SampledFunction, shape_check
from ..helpers import TOL, TOL_STRICT
from ..properties import check_monotonicity, check_properly_quasimonotone
from ..properties.monotonicity import SUBSET_LIMIT

logger = logging.getLogger(__name__)

CLASSES = (
    "unrestricted",
    "monotone",
    "pseudomonotone",
    "quasimonotone",
    "properly_quasimonotone",
    "sq",
)
RETRIES = 50


def _unrestricted(rng, n):
    return rng.uniform(-1.0, 1.0, (n, n))


def _monotone(rng, n):
    # f(x,y) = g(y) - g(x) - d(x,y), d >= 0 symmetric
    g = rng.uniform(-1.0, 1.0, n)
    d = rng.uniform(0.0, 0.5, (n, n))
    d = 0.5 * (d + d.T)
    d[rng.random((n, n)) < 0.3] = 0.0
    d = numpy.maximum(d, d.T)
    return g[None, :] - g[:, None] - d


def _pseudomonotone(rng, n):
    # f(x,y) = a(x) (phi(y) - phi(x)), a > 0, phi strictly increasing
    a = rng.uniform(0.2, 2.0, n)
    phi = numpy.cumsum(rng.uniform(0.05, 1.0, n))
    return a[:, None] * (phi[None, :] - phi[:, None])


def _quasimonotone(rng, n):
    f = rng.uniform(-1.0, 1.0, (n, n))
    both = numpy.triu((f > 0) & (f.T > 0), k=1)
    for i, j in numpy.argwhere(both):
        if rng.random() < 0.5:
            f[i, j] = -f[i, j]
        else:
            f[j, i] = -f[j, i]
    numpy.fill_diagonal(f, -numpy.abs(numpy.diag(f)))
    return f


def _properly_quasimonotone(rng, n):
    """Positives in column k < p only below the diagonal, in column k > p only
    above it, none in the pivot column p; so no column is reached by a positive
    value from both sides."""
    p = int(rng.integers(n))
    f = -rng.uniform(0.0, 1.0, (n, n))
    i = numpy.arange(n)[:, None]
    k = numpy.arange(n)[None, :]
    allowed = ((k < p) & (i > k)) | ((k > p) & (i < k))
    flip = allowed & (rng.random((n, n)) < 0.5)
    f[flip] = -f[flip]
    return f


def _sq(rng, n):
    """Rows strictly decreasing down to a random minimizer, then strictly
    increasing."""
    f = numpy.empty((n, n))
    for row in range(n):
        m = int(rng.integers(n))
        base = rng.uniform(-1.0, 1.0)
        left = numpy.cumsum(rng.uniform(0.05, 1.0, m))[::-1]
        right = numpy.cumsum(rng.uniform(0.05, 1.0, n - m - 1))
        f[row] = numpy.concatenate([base + left, [base], base + right])
    return f


_BUILDERS = {
    "unrestricted": _unrestricted,
    "monotone": _monotone,
    "pseudomonotone": _pseudomonotone,
    "quasimonotone": _quasimonotone,
    "properly_quasimonotone": _properly_quasimonotone,
    "sq": _sq,
}


def _verified(cls, table):
    if cls == "quasimonotone":
        return check_monotonicity(table, "quasimonotone", TOL, TOL_STRICT).passed
    if cls == "properly_quasimonotone":
        ok = check_properly_quasimonotone(table, "pair", TOL).passed
        if ok and len(table) <= SUBSET_LIMIT:
            ok = check_properly_quasimonotone(table, "subset", TOL).passed
        return ok
    if cls == "sq":
        return all(
            shape_check(table.row(i), "semistrictly_quasiconvex", TOL, TOL_STRICT)
            for i in range(len(table))
        )
    return True


def random_bifunction(cls, seed, grid, retries=RETRIES):
    """Random table of the given class on ``grid``, deterministic in ``seed``.

    Parameters
    ----------
    cls : str
        One of ``CLASSES``.
    seed : int
    grid : Grid
    retries : int, optional
        Attempts for the classes that are verified against a checker.

    Raises
    ------
    GenerationError
        No attempt passed verification.
    """
    if cls not in _BUILDERS:
        raise UsageError(f"unknown bifunction class {cls!r}; choose from {CLASSES}")
    build = _BUILDERS[cls]
    for attempt in range(retries):
        rng = numpy.random.default_rng([seed, attempt])
        table = ValueTable(grid, build(rng, grid.count), f"{cls}[{seed}]")
        if _verified(cls, table):
            return table
        logger.debug("%s seed %d: attempt %d rejected", cls, seed, attempt)
    raise GenerationError(f"no {cls} table after {retries} attempts", seed)


def random_row(seed, grid, spread=1.0):
    """Random sampled function on ``grid``."""
    rng = numpy.random.default_rng(seed)
    return SampledFunction(grid, rng.uniform(-spread, spread, grid.count))
