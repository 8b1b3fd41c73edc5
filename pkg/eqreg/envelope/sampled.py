import numpy

from .._exceptions import ConfigurationError
from ..domain import as_extended


class SampledFunction:
    """One-variable function given by its values on a grid.

    Parameters
    ----------
    grid : eqreg.domain.Grid
    values : array_like
        One extended real per grid point; +inf marks points outside the domain.
    """

    def __init__(self, grid, values):
        values = as_extended(values)
        if values.shape != (grid.count,):
            raise ConfigurationError(
                f"expected {grid.count} values for {grid}, got shape {values.shape}"
            )
        self.grid = grid
        self.values = values

    def __repr__(self):
        return f"<eqreg SampledFunction object, {len(self.values)} values>"

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, SampledFunction)
            and self.grid == other.grid
            and numpy.array_equal(self.values, other.values)
        )

    def with_values(self, values):
        return SampledFunction(self.grid, values)

    @property
    def x(self):
        return self.grid.points
