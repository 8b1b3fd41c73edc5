import numpy

from .convex import AffineMinorant, affine_minorant, convex_envelope, lower_hull
from .kind import EnvelopeKind
from .lsc import jump_limits, lsc_envelope, lsc_rows, one_sided_limits
from .oracle import envelope_oracle
from .quasiconvex import level_set, level_set_hull, quasiconvex_envelope, running_minima
from .sampled import SampledFunction
from .shape import shape_check


def envelope(f, kind):
    """Apply the envelope of the given kind to sampled values.

    On a grid the closed and non-closed variants coincide by value; the lsc
    envelope of samples is the identity.
    """
    kind = EnvelopeKind.parse(kind)
    if kind.is_convex:
        return convex_envelope(f)
    if kind.is_quasiconvex:
        return quasiconvex_envelope(f)
    return lsc_envelope(f)


def envelope_rows(values, grid, kind):
    """Envelope of every row of a 2-D array whose rows are sampled on ``grid``."""
    kind = EnvelopeKind.parse(kind)
    values = numpy.asarray(values, dtype=float)
    out = numpy.empty_like(values)
    for i, row in enumerate(values):
        out[i] = envelope(SampledFunction(grid, row), kind).values
    return out


__all__ = [
    "AffineMinorant",
    "EnvelopeKind",
    "SampledFunction",
    "affine_minorant",
    "convex_envelope",
    "envelope",
    "envelope_oracle",
    "envelope_rows",
    "jump_limits",
    "level_set",
    "level_set_hull",
    "lower_hull",
    "lsc_envelope",
    "lsc_rows",
    "one_sided_limits",
    "quasiconvex_envelope",
    "running_minima",
    "shape_check",
]
