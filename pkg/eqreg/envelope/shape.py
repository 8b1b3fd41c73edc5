import numpy

from .._exceptions import UsageError
from .._verdict import Verdict, make_witness
from ..domain import require_finite
from ..helpers import TOL, TOL_STRICT, first_true

SHAPES = ("convex", "quasiconvex", "semistrictly_quasiconvex")


def _convex(f, tol):
    v = f.values
    if len(v) < 3:
        return None
    d2 = v[:-2] - 2 * v[1:-1] + v[2:]
    k = first_true(d2 < -tol)
    if k is None:
        return None
    return (k, k + 1, k + 2), {"second_difference": d2[k]}


def _quasiconvex(f, tol):
    v = f.values
    left, right = _strict_running_minima(v)
    bad = v > numpy.maximum(left, right) + tol
    k = first_true(bad)
    if k is None:
        return None
    # nearest points on either side that lie clearly below f_k
    i = int(numpy.flatnonzero(v[:k] < v[k] - tol)[-1])
    j = k + 1 + int(numpy.flatnonzero(v[k + 1 :] < v[k] - tol)[0])
    return (i, k, j), {"f_i": v[i], "f_k": v[k], "f_j": v[j]}


def _strict_running_minima(v):
    inf = numpy.array([numpy.inf])
    left = numpy.concatenate([inf, numpy.minimum.accumulate(v)[:-1]])
    right = numpy.concatenate([numpy.minimum.accumulate(v[::-1])[::-1][1:], inf])
    return left, right


def _semistrict(f, tol, tol_strict):
    v = f.values
    n = len(v)
    out = _quasiconvex(f, tol)
    if out is not None or n < 3:
        return out

    k_idx = numpy.arange(n)[:, None]
    j_idx = numpy.arange(n)[None, :]
    reachable = v[None, :] <= v[:, None] + tol_strict
    left_min, right_min = _strict_running_minima(v)

    # far end on the right, low end on the left
    far = numpy.where((j_idx > k_idx) & reachable, v[None, :], -numpy.inf)
    right_top = far.max(axis=1)
    bad_right = left_min < right_top - tol
    # far end on the left, low end on the right
    far = numpy.where((j_idx < k_idx) & reachable, v[None, :], -numpy.inf)
    left_top = far.max(axis=1)
    bad_left = right_min < left_top - tol

    k = first_true(bad_right | bad_left)
    if k is None:
        return None
    if bad_right[k]:
        i = int(numpy.argmin(v[:k]))
        j = k + 1 + int(numpy.flatnonzero(v[k + 1 :] == right_top[k])[0])
        low, high = i, j
    else:
        i = int(numpy.flatnonzero(v[:k] == left_top[k])[0])
        j = k + 1 + int(numpy.argmin(v[k + 1 :]))
        low, high = j, i
    return (i, k, j), {"f_low": v[low], "f_k": v[k], "f_high": v[high]}


def shape_check(f, shape, tol=TOL, tol_strict=TOL_STRICT):
    """Decide whether samples are convex, quasiconvex or semistrictly quasiconvex.

    Parameters
    ----------
    f : SampledFunction
    shape : str
        One of ``"convex"``, ``"quasiconvex"``, ``"semistrictly_quasiconvex"``.

    Returns
    -------
    Verdict
        A failing verdict carries the triple ``(i, k, j)`` with ``i < k < j``.
    """
    require_finite(f.values, "shape check input")
    if shape == "convex":
        out = _convex(f, tol)
    elif shape == "quasiconvex":
        out = _quasiconvex(f, tol)
    elif shape == "semistrictly_quasiconvex":
        out = _semistrict(f, tol, tol_strict)
    else:
        raise UsageError(f"unknown shape {shape!r}; choose from {SHAPES}")

    if out is None:
        return Verdict(shape, True, None, tol, tol_strict)
    (i, k, j), values = out
    witness = make_witness(f.grid, values, i=i, k=k, j=j)
    return Verdict(shape, False, witness, tol, tol_strict)
