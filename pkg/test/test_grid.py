import math

import numpy
import pytest

import eqreg
from eqreg.domain import as_extended, require_finite


def test_make_grid():
    grid = eqreg.make_grid(0.0, 2.0, 201)
    assert grid.count == 201
    assert grid.lower == 0.0
    assert grid.upper == 2.0
    assert grid.spacing == pytest.approx(0.01)
    # breakpoints are hit exactly
    assert grid.points[100] == 1.0
    assert grid.points[50] == 0.5
    assert grid.index_of(1.5) == 150


def test_single_point_grid():
    grid = eqreg.make_grid(3.0, 3.0, 1)
    assert grid.count == 1
    assert grid.spacing == 0.0


@pytest.mark.parametrize(
    "lower, upper, count",
    [
        (0.0, 1.0, 1),
        (0.0, 1.0, 0),
        (1.0, 0.0, 5),
        (0.0, math.inf, 5),
        (0.0, 1.0, 2.5),
        (2.0, 2.0, 3),
    ],
)
def test_make_grid_errors(lower, upper, count):
    with pytest.raises(eqreg.ConfigurationError):
        eqreg.make_grid(lower, upper, count)


def test_points_read_only():
    grid = eqreg.make_grid(0.0, 1.0, 5)
    with pytest.raises(ValueError):
        grid.points[0] = 1.0


def test_index_of_off_grid():
    grid = eqreg.make_grid(0.0, 1.0, 5)
    with pytest.raises(eqreg.ConfigurationError):
        grid.index_of(0.3)
    numpy.testing.assert_array_equal(grid.indices_of([0.0, 0.5, 1.0]), [0, 2, 4])


def test_truncation_nesting():
    schedule = eqreg.TruncationSchedule(-math.inf, math.inf, 0.125, 1, 4)
    assert schedule.levels == [1, 2, 3, 4]
    assert schedule.directions == [-1, 1]
    assert not schedule.is_bounded
    coarse = eqreg.truncation_grid(schedule, 1)
    fine = eqreg.truncation_grid(schedule, 4)
    assert coarse.count == 17
    assert fine.count == 65
    # every coarse point is bit-identical to a fine point
    assert set(coarse.points.tolist()) <= set(fine.points.tolist())


def test_truncation_half_line():
    schedule = eqreg.TruncationSchedule(0.0, math.inf, 0.125, 1, 3)
    assert schedule.anchor == 0.0
    assert schedule.directions == [1]
    grid = eqreg.truncation_grid(schedule, 2)
    assert grid.lower == 0.0
    assert grid.upper == 2.0
    # the outward neighbor of an interior point stays inside K_n
    assert grid.interior[0]
    assert grid.interior[-2]
    assert not grid.interior[-1]


@pytest.mark.parametrize(
    "lower,spacing,n,interior",
    [
        (0.0, 0.3, 8, [True] * 26 + [False]),
        (0.0, 2.0, 3, [True, False]),
        (0.0, 2.0, 1, [False]),
        (-math.inf, 0.3, 1, [False] + [True] * 5 + [False]),
        (-math.inf, 0.125, 1, [False] + [True] * 15 + [False]),
    ],
)
def test_truncation_interior_spacing_off_level(lower, spacing, n, interior):
    # the last point falls short of n when h does not divide n
    schedule = eqreg.TruncationSchedule(lower, math.inf, spacing, 1, 8)
    grid = eqreg.truncation_grid(schedule, n)
    assert grid.interior.tolist() == interior


def test_truncation_anchor_upper():
    schedule = eqreg.TruncationSchedule(-math.inf, 0.3, 0.25, 1, 2)
    assert schedule.anchor == 0.3
    grid = eqreg.truncation_grid(schedule, 1)
    numpy.testing.assert_allclose(grid.points, [-0.95, -0.7, -0.45, -0.2, 0.05, 0.3])


def test_truncation_errors():
    with pytest.raises(eqreg.DomainError):
        eqreg.TruncationSchedule(5.0, math.inf, 0.125, 1, 3)
    with pytest.raises(eqreg.ConfigurationError):
        eqreg.TruncationSchedule(0.0, math.inf, 0.0, 1, 3)
    with pytest.raises(eqreg.ConfigurationError):
        eqreg.TruncationSchedule(0.0, math.inf, 0.125, 3, 1)
    schedule = eqreg.TruncationSchedule(0.0, math.inf, 0.125, 1, 3)
    with pytest.raises(eqreg.ConfigurationError):
        eqreg.truncation_grid(schedule, 4)


def test_extended_reals():
    assert as_extended([1.0, math.inf])[1] == math.inf
    with pytest.raises(eqreg.DomainError):
        as_extended([math.nan])
    with pytest.raises(eqreg.DomainError):
        as_extended([-math.inf])
    with pytest.raises(eqreg.DomainError):
        require_finite([0.0, math.inf], "row")


if __name__ == "__main__":
    test_make_grid()
