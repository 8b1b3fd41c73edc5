import numpy

from .._exceptions import ConfigurationError
from .._verdict import Verdict, make_witness
from ..helpers import TOL, first_true, last_true


def check_upper_sign(table, radius=None, tol=TOL):
    """(Local) upper sign property on the grid.

    For x = x_i and y = x_j the premise is f(x_t, x) <= tol for every grid point
    x_t strictly between x and y; when it holds, f(x, y) >= -tol is required.
    Pairs without a strictly-between point, i = j included, have a vacuous
    premise. With ``radius`` only pairs with |x_j - x_i| <= radius are scanned.
    """
    if radius is not None and not radius > 0:
        raise ConfigurationError(f"radius must be positive, got {radius}")
    f = table.values
    x = table.grid.points
    n = len(x)
    check = "upper_sign" if radius is None else "local_upper_sign"
    for i in range(n):
        positive = f[:, i] > tol
        right = first_true(positive[i + 1 :])
        hi = n - 1 if right is None else i + 1 + right
        left = last_true(positive[:i])
        lo = 0 if left is None else left
        candidates = numpy.arange(lo, hi + 1)
        if radius is not None:
            near = numpy.abs(x[candidates] - x[i]) <= radius * (1 + 1e-12)
            candidates = candidates[near]
        bad = candidates[f[i, candidates] < -tol]
        if len(bad) > 0:
            j = int(bad[0])
            between = f[min(i, j) + 1 : max(i, j), i]
            values = {"f(x,y)": f[i, j]}
            if len(between) > 0:
                values["max f(x_t,x)"] = between.max()
            witness = make_witness(table.grid, values, x=i, y=j)
            return Verdict(check, False, witness, tol, 0.0)
    return Verdict(check, True, None, tol, 0.0)
