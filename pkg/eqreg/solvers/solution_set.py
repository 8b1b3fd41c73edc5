import numpy


class SolutionSet:
    """Grid indices solving EP or CFP on a sampled table.

    Parameters
    ----------
    grid : eqreg.domain.Grid
    indices : array_like of int
    tol : float
    problem : str
        ``"EP"``, ``"CFP"`` or ``"local CFP"``.
    """

    def __init__(self, grid, indices, tol, problem="EP"):
        self.grid = grid
        self.indices = numpy.unique(numpy.asarray(indices, dtype=int))
        self.tol = tol
        self.problem = problem

    def __repr__(self):
        return (
            f"<eqreg SolutionSet object, {self.problem}, "
            f"{len(self.indices)} of {self.grid.count} points>"
        )

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(int(i) for i in self.indices)

    def __contains__(self, index):
        return int(index) in set(self.indices.tolist())

    def __eq__(self, other):
        return (
            isinstance(other, SolutionSet)
            and self.grid == other.grid
            and numpy.array_equal(self.indices, other.indices)
        )

    @property
    def points(self):
        return self.grid.points[self.indices]

    @property
    def is_empty(self):
        return len(self.indices) == 0

    def issubset(self, other):
        assert self.grid == other.grid
        return bool(numpy.all(numpy.isin(self.indices, other.indices)))

    def as_dict(self):
        return {
            "problem": self.problem,
            "indices": [int(i) for i in self.indices],
            "points": [float(p) for p in self.points],
            "tol": self.tol,
        }
