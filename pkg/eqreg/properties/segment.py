import numpy

from .._exceptions import UsageError
from .._verdict import Verdict, make_witness
from ..helpers import TOL, TOL_STRICT, first_true, last_true


def _beta(table, tol, tol_strict):
    # f(x,y) < 0 and f(x,x) = 0  =>  f(x, x_t) < 0,  x_t = t x + (1-t) y
    f = table.values
    for i in range(len(f)):
        if abs(f[i, i]) > tol:
            continue
        row = f[i]
        negative = row < -tol_strict
        blocked = ~negative
        b = last_true(blocked[:i])
        if b is not None:
            j = first_true(negative[:b])
            if j is not None:
                return i, j, b
        b = first_true(blocked[i + 1 :])
        if b is not None:
            b += i + 1
            j = first_true(negative[b + 1 :])
            if j is not None:
                return i, b + 1 + j, b
    return None


def _alpha(table, tol, tol_strict):
    # [f(x,y1) <= 0 and f(x,y2) < 0]  =>  f(x, y_t) < 0,  y_t = t y1 + (1-t) y2
    f = table.values
    n = len(f)
    for i in range(n):
        row = f[i]
        negative = row < -tol_strict
        nonpositive = row <= tol
        neg_before = numpy.concatenate(
            [[False], numpy.logical_or.accumulate(negative)[:-1]]
        )
        nonpos_before = numpy.concatenate(
            [[False], numpy.logical_or.accumulate(nonpositive)[:-1]]
        )
        neg_after = numpy.concatenate(
            [numpy.logical_or.accumulate(negative[::-1])[::-1][1:], [False]]
        )
        nonpos_after = numpy.concatenate(
            [numpy.logical_or.accumulate(nonpositive[::-1])[::-1][1:], [False]]
        )
        forward = neg_before & nonpos_after
        backward = neg_after & nonpos_before
        k = first_true(~negative & (forward | backward))
        if k is None:
            continue
        if forward[k]:
            y2 = first_true(negative[:k])
            y1 = k + 1 + last_true(nonpositive[k + 1 :])
        else:
            y2 = k + 1 + last_true(negative[k + 1 :])
            y1 = first_true(nonpositive[:k])
        return i, y1, y2, k
    return None


def check_segment_condition(table, kind, tol=TOL, tol_strict=TOL_STRICT):
    """Conditions (alpha) and (beta) on grid-exact segment points.

    beta: f(x,y) < 0 and f(x,x) = 0 imply f(x,x_t) < 0 for x_t strictly between.
    alpha: f(x,y_1) <= 0 and f(x,y_2) < 0 imply f(x,y_t) < 0 for y_t strictly
    between.
    """
    f = table.values
    if kind == "beta":
        out = _beta(table, tol, tol_strict)
        if out is None:
            return Verdict(kind, True, None, tol, tol_strict)
        i, j, t = out
        values = {"f(x,y)": f[i, j], "f(x,x)": f[i, i], "f(x,x_t)": f[i, t]}
        witness = make_witness(table.grid, values, x=i, y=j, x_t=t)
    elif kind == "alpha":
        out = _alpha(table, tol, tol_strict)
        if out is None:
            return Verdict(kind, True, None, tol, tol_strict)
        i, y1, y2, t = out
        values = {"f(x,y_1)": f[i, y1], "f(x,y_2)": f[i, y2], "f(x,y_t)": f[i, t]}
        witness = make_witness(table.grid, values, x=i, y_1=y1, y_2=y2, y_t=t)
    else:
        raise UsageError(f"unknown segment condition {kind!r}; choose alpha or beta")
    return Verdict(kind, False, witness, tol, tol_strict)
