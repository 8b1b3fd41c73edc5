from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

Index = Union[int, Tuple[int, ...]]


@dataclass(frozen=True)
class Witness:
    """Counterexample to a checked property.

    ``indices`` maps a role (``"x"``, ``"y"``, ``"x_t"``, ``"points"``, ...) to a
    grid index or a tuple of grid indices; ``points`` holds the corresponding
    abscissas and ``values`` the table entries that violate the inequality.
    """

    indices: Dict[str, Index]
    points: Dict[str, Union[float, Tuple[float, ...]]] = field(default_factory=dict)
    values: Dict[str, float] = field(default_factory=dict)

    def as_dict(self):
        return {
            "indices": {k: _plain(v) for k, v in self.indices.items()},
            "points": {k: _plain(v) for k, v in self.points.items()},
            "values": {k: float(v) for k, v in self.values.items()},
        }


@dataclass(frozen=True)
class Verdict:
    check: str
    passed: bool
    witness: Optional[Witness] = None
    tol: float = 0.0
    tol_strict: float = 0.0

    def __post_init__(self):
        assert self.passed or self.witness is not None, "failed verdicts need a witness"

    def __bool__(self):
        return self.passed

    def as_dict(self):
        return {
            "check": self.check,
            "passed": self.passed,
            "witness": None if self.witness is None else self.witness.as_dict(),
            "tol": self.tol,
            "tol_strict": self.tol_strict,
        }


def _plain(v):
    if isinstance(v, tuple):
        return [_plain(u) for u in v]
    if isinstance(v, int):
        return v
    return float(v)


def make_witness(grid, values=None, **roles):
    """Build a witness from role keyword arguments holding grid indices."""
    indices = {}
    points = {}
    for role, idx in roles.items():
        if isinstance(idx, (tuple, list)):
            indices[role] = tuple(int(i) for i in idx)
            points[role] = tuple(float(grid.points[i]) for i in idx)
        else:
            indices[role] = int(idx)
            points[role] = float(grid.points[idx])
    return Witness(indices, points, {k: float(v) for k, v in (values or {}).items()})
