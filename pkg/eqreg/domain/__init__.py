from .extended import NEG_INF, POS_INF, as_extended, require_finite
from .grid import Grid, make_grid
from .truncation import TruncationGrid, TruncationSchedule, truncation_grid

__all__ = [
    "Grid",
    "make_grid",
    "TruncationGrid",
    "TruncationSchedule",
    "truncation_grid",
    "POS_INF",
    "NEG_INF",
    "as_extended",
    "require_finite",
]
