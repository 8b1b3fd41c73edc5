import numpy

from .._exceptions import ConfigurationError


class Grid:
    """Uniform grid over a closed interval.

    Parameters
    ----------
    points : array_like
        Strictly increasing, equally spaced abscissas.
    spacing : float
        Distance between neighbors; 0 for a single point.
    """

    def __init__(self, points, spacing):
        points = numpy.asarray(points, dtype=float)
        assert points.ndim == 1 and len(points) >= 1
        assert len(points) == 1 or numpy.all(numpy.diff(points) > 0.0)
        self.points = points
        self.points.setflags(write=False)
        self.spacing = float(spacing)

    @property
    def lower(self):
        return float(self.points[0])

    @property
    def upper(self):
        return float(self.points[-1])

    @property
    def count(self):
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return (
            f"<eqreg Grid object, [{self.lower}, {self.upper}], "
            f"count={self.count}, spacing={self.spacing}>"
        )

    def __eq__(self, other):
        return (
            isinstance(other, Grid)
            and self.count == other.count
            and numpy.array_equal(self.points, other.points)
        )

    def __hash__(self):
        return hash((self.count, self.lower, self.upper))

    def index_of(self, x, tol=None):
        """Index of the grid point at ``x``; raises if ``x`` is not a grid point."""
        if tol is None:
            tol = 1.0e-9 * max(1.0, self.spacing)
        k = int(numpy.argmin(numpy.abs(self.points - x)))
        if abs(self.points[k] - x) > tol:
            raise ConfigurationError(f"{x} is not a point of {self}")
        return k

    def indices_of(self, xs, tol=None):
        return numpy.array([self.index_of(x, tol) for x in xs], dtype=int)


def make_grid(lower, upper, count):
    """Uniform grid with ``count`` points from ``lower`` to ``upper``.

    Points are ``lower + (upper - lower) * i / (count - 1)`` so that every dyadic
    breakpoint of the interval is hit exactly.
    """
    if not (numpy.isfinite(lower) and numpy.isfinite(upper)):
        raise ConfigurationError(f"grid bounds must be finite, got [{lower}, {upper}]")
    if int(count) != count or count < 1:
        raise ConfigurationError(f"grid count must be a positive integer, got {count}")
    count = int(count)
    if lower > upper:
        raise ConfigurationError(f"lower bound {lower} exceeds upper bound {upper}")
    if lower == upper:
        if count != 1:
            raise ConfigurationError("a degenerate interval admits exactly one point")
        return Grid([float(lower)], 0.0)
    if count < 2:
        raise ConfigurationError("a nondegenerate interval needs at least two points")

    lower = float(lower)
    upper = float(upper)
    points = lower + (upper - lower) * numpy.arange(count) / (count - 1)
    points[-1] = upper
    return Grid(points, (upper - lower) / (count - 1))
