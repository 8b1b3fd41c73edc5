import logging

import numpy

from .._exceptions import ConfigurationError, DomainError
from ..domain import require_finite
from ..envelope import EnvelopeKind, SampledFunction, envelope_rows, lsc_rows
from ..helpers import REFINEMENT, TOL

logger = logging.getLogger(__name__)


class ValueTable:
    """Bifunction sampled on a grid, ``values[i, j] = f(x_i, x_j)``.

    Rows are the slices y -> f(x_i, y) that regularizations act on.
    """

    def __init__(self, grid, values, label=""):
        values = numpy.array(values, dtype=float)
        if values.shape != (grid.count, grid.count):
            raise ConfigurationError(
                f"table shape {values.shape} does not match {grid.count} grid points"
            )
        require_finite(values, "table entries")
        self.grid = grid
        self.values = values
        self.values.setflags(write=False)
        self.label = label

    def __repr__(self):
        label = f" {self.label!r}," if self.label else ""
        return f"<eqreg ValueTable object,{label} {self.grid.count}x{self.grid.count}>"

    def __len__(self):
        return self.grid.count

    def __eq__(self, other):
        return (
            isinstance(other, ValueTable)
            and self.grid == other.grid
            and numpy.array_equal(self.values, other.values)
        )

    @property
    def diagonal(self):
        return numpy.diag(self.values).copy()

    def transpose(self):
        return ValueTable(self.grid, self.values.T, f"{self.label}^T")

    def row(self, i):
        return SampledFunction(self.grid, self.values[i])

    def with_values(self, values, label=None):
        return ValueTable(self.grid, values, self.label if label is None else label)


def sample_matrix(spec, grid):
    """Table of ``spec`` on the grid; evaluation errors carry the (i, j) entry."""
    lower, upper = spec.domain
    if grid.lower < lower or grid.upper > upper:
        raise DomainError(f"{grid} is not contained in K = [{lower}, {upper}]")
    x = grid.points
    values = spec.values(x[:, None], x[None, :])
    return ValueTable(grid, values, spec.name)


def regularize(table, kind, source=None, refinement=REFINEMENT, tol=TOL):
    """Replace each row of ``table`` by its envelope of the given kind.

    Parameters
    ----------
    table : ValueTable
    kind : EnvelopeKind or str
    source : BifunctionSpec, optional
        When given, every row is first lowered to its one-sided limits found by
        probing at resolution ``h / refinement``; this is what makes the lsc
        envelope differ from the samples.
    """
    kind = EnvelopeKind.parse(kind)
    values = table.values
    if source is not None:
        x = table.grid.points
        values = lsc_rows(
            values,
            table.grid,
            lambda y: source.values(x[:, None], y[None, :]),
            refinement,
            tol,
        )
        logger.debug(
            "%s: %d entries lowered to one-sided limits",
            table.label,
            int(numpy.count_nonzero(values < table.values)),
        )

    out = envelope_rows(values, table.grid, kind)
    return ValueTable(
        table.grid, numpy.minimum(out, table.values), f"{table.label}_{kind.alias}"
    )
