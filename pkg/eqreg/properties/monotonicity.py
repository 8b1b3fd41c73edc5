import itertools

import numpy

from .._exceptions import UsageError
from .._verdict import Verdict, make_witness
from ..helpers import TOL, TOL_STRICT, first_true

KINDS = ("monotone", "pseudomonotone", "quasimonotone")
SUBSET_LIMIT = 12


def check_monotonicity(table, kind, tol=TOL, tol_strict=TOL_STRICT):
    """Exhaustive pair scan for one level of the monotonicity hierarchy.

    A pair (x, y) violates

    - monotonicity when f(x,y) + f(y,x) > tol,
    - pseudomonotonicity when f(x,y) >= 0 and f(y,x) > tol,
    - quasimonotonicity when f(x,y) > tol_strict and f(y,x) > tol.

    The pseudomonotone premise f(x,y) >= 0 is exact, not >= -tol. With it a
    monotone table is pseudomonotone and a pseudomonotone table quasimonotone at
    the same tolerances.

    Monotonicity is symmetric in the pair, so only pairs with y <= x are
    scanned and its witness has x >= y.
    """
    f = table.values
    ft = f.T
    if kind == "monotone":
        bad = numpy.tril(f + ft > tol)
    elif kind == "pseudomonotone":
        bad = (f >= 0.0) & (ft > tol)
    elif kind == "quasimonotone":
        bad = (f > tol_strict) & (ft > tol)
    else:
        raise UsageError(f"unknown monotonicity kind {kind!r}; choose from {KINDS}")

    hits = numpy.argwhere(bad)
    if len(hits) == 0:
        return Verdict(kind, True, None, tol, tol_strict)
    i, j = (int(v) for v in hits[0])
    values = {"f(x,y)": f[i, j], "f(y,x)": f[j, i]}
    if kind == "monotone":
        values["sum"] = f[i, j] + f[j, i]
    witness = make_witness(table.grid, values, x=i, y=j)
    return Verdict(kind, False, witness, tol, tol_strict)


def _pair_scan(f, tol):
    n = len(f)
    positive = f > tol
    up_to = numpy.arange(n)[:, None] <= numpy.arange(n)[None, :]
    from_left = numpy.any(positive & up_to, axis=0)
    from_right = numpy.any(positive & up_to.T, axis=0)
    k = first_true(from_left & from_right)
    if k is None:
        return None
    i = first_true(positive[: k + 1, k])
    j = k + first_true(positive[k:, k])
    return (i, j) if i != j else (i,), k


def _subset_scan(f, tol):
    n = len(f)
    if n > SUBSET_LIMIT:
        raise UsageError(
            f"subset method is limited to {SUBSET_LIMIT} grid points, got {n}"
        )
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            lo, hi = subset[0], subset[-1]
            column_min = f[list(subset), lo : hi + 1].min(axis=0)
            c = first_true(column_min > tol)
            if c is not None:
                return subset, lo + c
    return None


def check_properly_quasimonotone(table, method="pair", tol=TOL):
    """Proper quasimonotonicity: every point x of the hull of finitely many
    points x_1..x_m has some f(x_i, x) <= 0.

    ``method="pair"`` uses the one-dimensional reduction to pairs i <= k <= j
    (and singletons), ``method="subset"`` enumerates all subsets literally and is
    restricted to small grids.
    """
    f = table.values
    if method == "pair":
        out = _pair_scan(f, tol)
    elif method == "subset":
        out = _subset_scan(f, tol)
    else:
        raise UsageError(f"unknown method {method!r}; choose pair or subset")
    check = "properly_quasimonotone"
    if out is None:
        return Verdict(check, True, None, tol, 0.0)
    points, k = out
    values = {f"f(x_{p},x)": f[p, k] for p in points}
    witness = make_witness(table.grid, values, points=points, x=k)
    return Verdict(check, False, witness, tol, 0.0)
