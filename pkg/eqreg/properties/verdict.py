import numpy

from .._exceptions import UsageError
from .._verdict import Verdict, Witness, make_witness


def _strictly_between(t, a, b):
    return min(a, b) < t < max(a, b)


def reverify(data, verdict):
    """Plug a failing verdict's witness back into the defining inequality.

    Parameters
    ----------
    data : ValueTable or SampledFunction
        What the verdict was computed on.
    verdict : Verdict

    Returns
    -------
    bool
        True when the witness reproduces the violation.
    """
    if verdict.passed:
        raise UsageError("passing verdicts carry no witness")
    w = verdict.witness.indices
    tol = verdict.tol
    ts = verdict.tol_strict
    check = verdict.check
    f = numpy.asarray(data.values)

    if check in ("convex", "quasiconvex", "semistrictly_quasiconvex"):
        i, k, j = w["i"], w["k"], w["j"]
        if not i < k < j:
            return False
        if check == "convex":
            return j - i == 2 and f[i] - 2 * f[k] + f[j] < -tol
        quasi = f[k] > max(f[i], f[j]) + tol
        if check == "quasiconvex" or quasi:
            return quasi
        low, high = min(f[i], f[j]), max(f[i], f[j])
        return low < high - tol and f[k] >= high - ts

    if check == "monotone":
        i, j = w["x"], w["y"]
        return f[i, j] + f[j, i] > tol
    if check == "pseudomonotone":
        i, j = w["x"], w["y"]
        return f[i, j] >= 0.0 and f[j, i] > tol
    if check == "quasimonotone":
        i, j = w["x"], w["y"]
        return f[i, j] > ts and f[j, i] > tol
    if check == "properly_quasimonotone":
        points, k = w["points"], w["x"]
        return min(points) <= k <= max(points) and all(f[p, k] > tol for p in points)
    if check in ("upper_sign", "local_upper_sign"):
        i, j = w["x"], w["y"]
        premise = f[min(i, j) + 1 : max(i, j), i]
        return bool(numpy.all(premise <= tol)) and f[i, j] < -tol
    if check == "beta":
        i, j, t = w["x"], w["y"], w["x_t"]
        return (
            abs(f[i, i]) <= tol
            and f[i, j] < -ts
            and _strictly_between(t, i, j)
            and f[i, t] >= -ts
        )
    if check == "alpha":
        i, y1, y2, t = w["x"], w["y_1"], w["y_2"], w["y_t"]
        return (
            f[i, y1] <= tol
            and f[i, y2] < -ts
            and _strictly_between(t, y1, y2)
            and f[i, t] >= -ts
        )
    raise UsageError(f"cannot re-verify check {check!r}")


__all__ = ["Verdict", "Witness", "make_witness", "reverify"]
