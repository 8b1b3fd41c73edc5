import math

import numpy

from .._exceptions import ConfigurationError, DomainError
from .grid import Grid


class TruncationSchedule:
    """Nested truncations K_n = K ∩ [-n, n] of an interval K, n = n_min..n_max.

    All truncation grids share one anchor and the spacing ``h``; a grid point is
    ``anchor + i * h`` for a global integer ``i``, which makes the grids nest
    exactly.

    Parameters
    ----------
    lower, upper : float
        Bounds of K, either may be infinite.
    spacing : float
    n_min, n_max : int
    """

    def __init__(self, lower, upper, spacing, n_min, n_max):
        lower = float(lower)
        upper = float(upper)
        if math.isnan(lower) or math.isnan(upper) or lower > upper:
            raise ConfigurationError(f"invalid domain [{lower}, {upper}]")
        if lower == math.inf or upper == -math.inf:
            raise ConfigurationError(f"invalid domain [{lower}, {upper}]")
        if not (spacing > 0.0 and math.isfinite(spacing)):
            raise ConfigurationError(f"spacing must be positive, got {spacing}")
        if int(n_min) != n_min or int(n_max) != n_max or not 1 <= n_min <= n_max:
            raise ConfigurationError(
                f"need integer levels 1 <= n_min <= n_max, got {n_min}, {n_max}"
            )
        self.lower = lower
        self.upper = upper
        self.spacing = float(spacing)
        self.n_min = int(n_min)
        self.n_max = int(n_max)

        if math.isfinite(lower):
            self.anchor = lower
        elif math.isfinite(upper):
            self.anchor = upper
        else:
            self.anchor = 0.0

        # fail early
        self._index_range(self.n_min)

    def __repr__(self):
        return (
            f"<eqreg TruncationSchedule object, K=[{self.lower}, {self.upper}], "
            f"h={self.spacing}, n={self.n_min}..{self.n_max}>"
        )

    @property
    def levels(self):
        return list(range(self.n_min, self.n_max + 1))

    @property
    def is_bounded(self):
        return math.isfinite(self.lower) and math.isfinite(self.upper)

    @property
    def directions(self):
        """Escape directions of K: -1 when K is unbounded below, +1 above."""
        out = []
        if self.lower == -math.inf:
            out.append(-1)
        if self.upper == math.inf:
            out.append(+1)
        return out

    def _index_range(self, n):
        a = max(self.lower, -n)
        b = min(self.upper, n)
        eps = 1.0e-9
        i_lo = math.ceil((a - self.anchor) / self.spacing - eps)
        i_hi = math.floor((b - self.anchor) / self.spacing + eps)
        if a > b or i_lo > i_hi:
            raise DomainError(
                f"truncation K_{n} of [{self.lower}, {self.upper}] is empty"
            )
        return i_lo, i_hi

    def points(self, n):
        i_lo, i_hi = self._index_range(n)
        return self.anchor + numpy.arange(i_lo, i_hi + 1) * self.spacing


class TruncationGrid(Grid):
    """Grid over a truncation K_n.

    A point is interior when its outward neighbor ``x + sign(x) h`` still lies
    in [-n, n]. When ``h`` does not divide ``n`` the last grid point falls short
    of n and is still a boundary point of the grid.
    """

    def __init__(self, points, spacing, level):
        super().__init__(points, spacing)
        self.level = level
        eps = 1.0e-9 * spacing
        self.interior = numpy.abs(self.points) + spacing <= level + eps
        self.interior.setflags(write=False)

    def __repr__(self):
        return (
            f"<eqreg TruncationGrid object, n={self.level}, "
            f"[{self.lower}, {self.upper}], count={self.count}>"
        )


def truncation_grid(schedule, n):
    if not schedule.n_min <= n <= schedule.n_max:
        raise ConfigurationError(
            f"level {n} outside schedule range {schedule.n_min}..{schedule.n_max}"
        )
    return TruncationGrid(schedule.points(n), schedule.spacing, n)
