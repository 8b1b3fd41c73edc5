"""Definition-literal oracles shared by the tests.

They loop over the defining quantifiers directly and are deliberately slow.
"""
import itertools

import numpy

import eqreg

TOL = 1.0e-9
TOL_STRICT = 1.0e-12


def table(values, lower=0.0, upper=1.0, label="f"):
    values = numpy.asarray(values, dtype=float)
    n = len(values)
    grid = eqreg.make_grid(lower, upper if n > 1 else lower, n)
    return eqreg.ValueTable(grid, values, label)


def sampled(values, lower=0.0, upper=1.0):
    values = numpy.asarray(values, dtype=float)
    n = len(values)
    grid = eqreg.make_grid(lower, upper if n > 1 else lower, n)
    return eqreg.SampledFunction(grid, values)


def monotonicity_oracle(f, kind, tol=TOL, tol_strict=TOL_STRICT):
    n = len(f)
    for i in range(n):
        for j in range(n):
            if kind == "monotone" and f[i][j] + f[j][i] > tol:
                return False
            if kind == "pseudomonotone" and f[i][j] >= 0 and f[j][i] > tol:
                return False
            if kind == "quasimonotone" and f[i][j] > tol_strict and f[j][i] > tol:
                return False
    return True


def properly_quasimonotone_oracle(f, tol=TOL):
    n = len(f)
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            for k in range(min(subset), max(subset) + 1):
                if all(f[i][k] > tol for i in subset):
                    return False
    return True


def upper_sign_oracle(f, tol=TOL, radius=None, x=None):
    n = len(f)
    for i in range(n):
        for j in range(n):
            if radius is not None and abs(x[j] - x[i]) > radius * (1 + 1e-12):
                continue
            lo, hi = min(i, j), max(i, j)
            premise = all(f[t][i] <= tol for t in range(lo + 1, hi))
            if premise and f[i][j] < -tol:
                return False
    return True


def beta_oracle(f, tol=TOL, tol_strict=TOL_STRICT):
    n = len(f)
    for i in range(n):
        if abs(f[i][i]) > tol:
            continue
        for j in range(n):
            if f[i][j] >= -tol_strict:
                continue
            lo, hi = min(i, j), max(i, j)
            if any(f[i][t] >= -tol_strict for t in range(lo + 1, hi)):
                return False
    return True


def alpha_oracle(f, tol=TOL, tol_strict=TOL_STRICT):
    n = len(f)
    for i in range(n):
        for y1 in range(n):
            if f[i][y1] > tol:
                continue
            for y2 in range(n):
                if f[i][y2] >= -tol_strict:
                    continue
                lo, hi = min(y1, y2), max(y1, y2)
                if any(f[i][t] >= -tol_strict for t in range(lo + 1, hi)):
                    return False
    return True


def ep_oracle(f, tol=TOL):
    return [i for i in range(len(f)) if all(v >= -tol for v in f[i])]


def cfp_oracle(f, tol=TOL):
    n = len(f)
    return [j for j in range(n) if all(f[i][j] <= tol for i in range(n))]
