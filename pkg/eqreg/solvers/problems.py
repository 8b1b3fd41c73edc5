from typing import NamedTuple

import numpy

from .._exceptions import ConfigurationError
from .._verdict import Verdict, make_witness
from ..helpers import TOL
from .solution_set import SolutionSet


def solve_ep(table, tol=TOL):
    """EP: points x with f(x, y) >= -tol for every grid y."""
    rows = table.values.min(axis=1)
    return SolutionSet(table.grid, numpy.flatnonzero(rows >= -tol), tol, "EP")


def solve_cfp(table, tol=TOL, radius=None):
    """CFP: points x with f(y, x) <= tol for every grid y, or only for
    |y - x| <= radius when a radius is given (local solutions)."""
    f = table.values
    if radius is None:
        cols = f.max(axis=0)
        return SolutionSet(table.grid, numpy.flatnonzero(cols <= tol), tol, "CFP")
    if not radius > 0:
        raise ConfigurationError(f"radius must be positive, got {radius}")
    x = table.grid.points
    near = numpy.abs(x[:, None] - x[None, :]) <= radius * (1 + 1e-12)
    cols = numpy.where(near, f, -numpy.inf).max(axis=0)
    return SolutionSet(table.grid, numpy.flatnonzero(cols <= tol), tol, "local CFP")


class KyFanPoint(NamedTuple):
    index: int
    floor: float
    diagonal_floor: float
    verdict: Verdict


def ky_fan_point(table, tol=TOL):
    """Max-min point x* of the table and the comparison of its floor
    min_y f(x*, y) with the diagonal floor min_w f(w, w)."""
    f = table.values
    floors = f.min(axis=1)
    i = int(numpy.argmax(floors))
    diagonal = numpy.diag(f)
    w = int(numpy.argmin(diagonal))
    passed = bool(floors[i] >= diagonal[w] - tol)
    witness = None
    if not passed:
        j = int(numpy.argmin(f[i]))
        values = {"floor": floors[i], "diagonal_floor": diagonal[w]}
        witness = make_witness(table.grid, values, x=i, y=j, w=w)
    verdict = Verdict("ky_fan", passed, witness, tol, 0.0)
    return KyFanPoint(i, float(floors[i]), float(diagonal[w]), verdict)


def extend_from_truncation(table, x, interior, tol=TOL):
    """Escape step out of a truncation: the first interior grid point y with
    f(x, y) <= tol, or None.

    A solution of the truncated problem with such a y solves the problem on
    the whole domain.
    """
    interior = numpy.asarray(interior)
    if interior[x] and table.values[x, x] <= tol:
        return int(x)
    ok = numpy.flatnonzero(interior & (table.values[x] <= tol))
    return int(ok[0]) if len(ok) > 0 else None
