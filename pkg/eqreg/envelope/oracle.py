"""Brute-force envelopes, used as independent witnesses for the fast operators."""
import numpy

from .._exceptions import UsageError
from ..domain import require_finite
from .kind import EnvelopeKind


def _chord_minimum(x, v):
    n = len(v)
    out = v.copy()
    for k in range(n):
        i = numpy.arange(0, k + 1)[:, None]
        j = numpy.arange(k, n)[None, :]
        valid = i < j
        if not numpy.any(valid):
            continue
        with numpy.errstate(invalid="ignore", divide="ignore"):
            t = (x[k] - x[i]) / (x[j] - x[i])
            chord = v[i] + (v[j] - v[i]) * t
        out[k] = min(out[k], numpy.min(chord[valid]))
    return out


def _level_scan(f):
    v = f.values
    n = len(v)
    levels = numpy.unique(v)
    below = v[None, :] <= levels[:, None]
    lo = numpy.argmax(below, axis=1)
    hi = n - 1 - numpy.argmax(below[:, ::-1], axis=1)
    k = numpy.arange(n)[None, :]
    inside = (lo[:, None] <= k) & (k <= hi[:, None])
    return levels[numpy.argmax(inside, axis=0)]


def envelope_oracle(f, kind):
    """Convex envelope as the minimum over all straddling chords, quasiconvex
    envelope as the least level whose level-set hull contains the point."""
    kind = EnvelopeKind.parse(kind)
    require_finite(f.values, "oracle input")
    if kind.is_convex:
        return f.with_values(_chord_minimum(f.x, f.values))
    if kind.is_quasiconvex:
        return f.with_values(_level_scan(f))
    raise UsageError(f"no oracle for envelope kind {kind.value!r}")
