import math

import numpy
import pytest
from helpers import sampled
from hypothesis import given, settings
from hypothesis import strategies as st

import eqreg
from eqreg.envelope import (
    affine_minorant,
    convex_envelope,
    envelope,
    envelope_oracle,
    envelope_rows,
    jump_limits,
    level_set,
    level_set_hull,
    lower_hull,
    lsc_envelope,
    lsc_rows,
    one_sided_limits,
    quasiconvex_envelope,
    running_minima,
    shape_check,
)

rows = st.lists(
    st.floats(min_value=-10.0, max_value=10.0, allow_nan=False), min_size=2, max_size=40
)
lattice_rows = st.lists(
    st.integers(-4, 4).map(lambda k: 0.25 * k), min_size=2, max_size=40
)


def test_kind_aliases():
    assert eqreg.EnvelopeKind.parse("q") is eqreg.EnvelopeKind.QUASICONVEX
    assert eqreg.EnvelopeKind.parse("cbar") is eqreg.EnvelopeKind.CONVEX_CLOSED
    assert eqreg.EnvelopeKind.parse("lsc").alias == "s"
    assert eqreg.EnvelopeKind.parse("qbar").is_quasiconvex
    with pytest.raises(eqreg.UsageError):
        eqreg.EnvelopeKind.parse("concave")


def test_convex_envelope():
    f = sampled([0.0, 1.0, 0.0, 1.0, 0.0], 0.0, 4.0)
    numpy.testing.assert_array_equal(convex_envelope(f).values, numpy.zeros(5))

    f = sampled([4.0, 1.0, 0.0, 1.0, 4.0], -2.0, 2.0)
    assert convex_envelope(f) == f

    f = sampled([0.0, 5.0, 2.0], 0.0, 2.0)
    numpy.testing.assert_allclose(convex_envelope(f).values, [0.0, 1.0, 2.0])


def test_worked_examples():
    bump = sampled([0.0, 1.0, -1.0, 1.0, 0.0])
    numpy.testing.assert_allclose(
        convex_envelope(bump).values, [0.0, -0.5, -1.0, -0.5, 0.0]
    )
    line = affine_minorant(bump, 2)
    assert line.slope == 0.0
    assert line.intercept == -1.0
    verdict = shape_check(bump, "quasiconvex")
    assert verdict.witness.indices["k"] == 1

    numpy.testing.assert_array_equal(
        convex_envelope(sampled([0.0, 0.25, 0.5, 0.75, 0.0])).values, numpy.zeros(5)
    )
    ramp = sampled([0.0, 1.0, 2.0, 3.0, 4.0])
    assert convex_envelope(ramp) == ramp
    assert quasiconvex_envelope(ramp) == ramp
    numpy.testing.assert_array_equal(
        quasiconvex_envelope(sampled([2.0, 0.0, 1.0, 0.0, 2.0])).values,
        [2.0, 0.0, 0.0, 0.0, 2.0],
    )

    spiked = sampled([-2.0, -1.5, 0.0, -0.5, 0.0], 0.0, 2.0)
    verdict = shape_check(spiked, "quasiconvex")
    assert verdict.witness.points == {"i": 0.5, "k": 1.0, "j": 1.5}
    increasing = sampled([-2.0, -1.5, -1.0, -0.5, 0.0])
    assert shape_check(increasing, "semistrictly_quasiconvex")


def test_lsc_worked_examples():
    grid = eqreg.make_grid(0.0, 1.0, 5)
    step = lsc_envelope(lambda y: numpy.where(y < 0.5, 0.0, 1.0), grid)
    numpy.testing.assert_array_equal(step.values, [0.0, 0.0, 0.0, 1.0, 1.0])

    grid = eqreg.make_grid(-1.0, 1.0, 9)
    parabola = lsc_envelope(lambda y: y ** 2, grid)
    numpy.testing.assert_array_equal(parabola.values, grid.points ** 2)

    grid = eqreg.make_grid(0.0, 1.0, 201)
    spike = eqreg.builtin_spec("spike")
    numpy.testing.assert_array_equal(
        lsc_envelope(spike.row(1.0), grid).values, numpy.zeros(201)
    )


def test_lower_hull():
    x = numpy.array([0.0, 1.0, 2.0, 3.0])
    v = numpy.array([0.0, 1.0, 2.0, 0.0])
    numpy.testing.assert_array_equal(lower_hull(x, v), [0, 3])


def test_quasiconvex_envelope():
    f = sampled([3.0, 0.0, 2.0, -1.0, 4.0], 0.0, 4.0)
    numpy.testing.assert_array_equal(
        quasiconvex_envelope(f).values, [3.0, 0.0, 0.0, -1.0, 4.0]
    )
    left, right = running_minima(f.values)
    numpy.testing.assert_array_equal(left, [3.0, 0.0, 0.0, -1.0, -1.0])
    numpy.testing.assert_array_equal(right, [-1.0, -1.0, -1.0, -1.0, 4.0])


def test_sq_row_envelope():
    # y - 2 with the spike 0 at y = 1, already lowered to its limit
    grid = eqreg.make_grid(0.0, 2.0, 5)
    row = lsc_envelope(
        lambda y: numpy.where(y == 1.0, 0.0, y - 2.0), grid, refinement=16
    )
    numpy.testing.assert_allclose(row.values, grid.points - 2.0, atol=1e-12)
    numpy.testing.assert_allclose(
        quasiconvex_envelope(row).values, grid.points - 2.0, atol=1e-12
    )


def test_level_sets():
    f = sampled([3.0, 0.0, 2.0, -1.0, 4.0], 0.0, 4.0)
    numpy.testing.assert_array_equal(level_set(f, 0.0), [1, 3])
    assert level_set_hull(f, 0.0) == (1, 3)
    assert level_set_hull(f, -2.0) is None


def test_lsc_identity_on_samples():
    f = sampled([1.0, 0.0, 1.0])
    assert lsc_envelope(f) == f


def test_jump_limits():
    limits = jump_limits([1.0, 0.0], [0.0, 0.0], [0.0, 0.0])
    assert limits[0] == 0.0
    assert limits[1] == math.inf


def test_one_sided_limits():
    grid = eqreg.make_grid(0.0, 1.0, 3)
    left, right = one_sided_limits(
        lambda y: numpy.where(y == 0.5, 1.0, y), grid, refinement=8
    )
    assert left[1] == pytest.approx(0.5)
    assert right[1] == pytest.approx(0.5)
    # no downward jumps at the ends
    assert left[2] == math.inf
    assert right[0] == math.inf


def test_lsc_envelope_rejects_non_finite_neighbor():
    grid = eqreg.make_grid(0.0, 1.0, 3)
    with pytest.raises(eqreg.EvaluationError):
        lsc_envelope(
            lambda y: numpy.where(y == 0.25, numpy.nan, y), grid, refinement=4
        )


def test_lsc_rows():
    grid = eqreg.make_grid(0.0, 1.0, 3)

    def source(y):
        return numpy.stack([numpy.where(y == 0.5, 1.0, y), y])

    values = source(grid.points)
    lowered = lsc_rows(values, grid, source, refinement=8)
    numpy.testing.assert_allclose(lowered, [[0.0, 0.5, 1.0], [0.0, 0.5, 1.0]])
    # the samples themselves stay untouched
    assert values[0, 1] == 1.0


@pytest.mark.parametrize("kind", ["convex", "quasiconvex"])
def test_envelope_rows(kind):
    values = numpy.array([[1.0, -0.5, 0.75, -1.0, 0.0], [0.0, 1.0, 0.0, 1.0, 0.0]])
    out = envelope_rows(values, eqreg.make_grid(0.0, 1.0, 5), kind)
    for row, env in zip(values, out):
        numpy.testing.assert_array_equal(env, envelope(sampled(row), kind).values)


def test_envelope_dispatch():
    f = sampled([0.0, 3.0, 1.0, 2.0], 0.0, 3.0)
    assert envelope(f, "c") == convex_envelope(f)
    assert envelope(f, "qbar") == quasiconvex_envelope(f)
    assert envelope(f, "s") == f


def test_affine_minorant():
    f = sampled([1.0, 0.0, 1.0], -1.0, 1.0)
    line = affine_minorant(f, 1)
    assert line.slope == 0.0
    assert line.intercept == 0.0
    line = affine_minorant(f, 0)
    assert line(-1.0) == pytest.approx(1.0)
    assert numpy.all(line(f.x) <= convex_envelope(f).values + 1e-12)
    with pytest.raises(eqreg.ConfigurationError):
        affine_minorant(f, 3)


def test_shape_check():
    assert shape_check(sampled([4.0, 1.0, 0.0, 1.0, 4.0]), "convex")
    verdict = shape_check(sampled([0.0, 2.0, 0.0]), "quasiconvex")
    assert not verdict.passed
    assert verdict.witness.indices == {"i": 0, "k": 1, "j": 2}
    # flat pieces above the minimum are quasiconvex but not semistrict
    flat = sampled([1.0, 2.0, 2.0, 3.0])
    assert shape_check(flat, "quasiconvex")
    assert not shape_check(flat, "semistrictly_quasiconvex")
    assert shape_check(sampled([0.0, -1.0, -1.0]), "semistrictly_quasiconvex")
    with pytest.raises(eqreg.UsageError):
        shape_check(flat, "concave")


@settings(max_examples=200, deadline=None)
@given(rows)
def test_convex_envelope_properties(values):
    f = sampled(values)
    env = convex_envelope(f)
    assert numpy.all(env.values <= f.values)
    assert shape_check(env, "convex", tol=1e-9)
    assert convex_envelope(env) == env
    oracle = envelope_oracle(f, "convex")
    numpy.testing.assert_allclose(env.values, oracle.values, rtol=0.0, atol=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.one_of(rows, lattice_rows))
def test_quasiconvex_envelope_properties(values):
    f = sampled(values)
    env = quasiconvex_envelope(f)
    assert numpy.all(env.values <= f.values)
    assert shape_check(env, "quasiconvex")
    assert quasiconvex_envelope(env) == env
    assert envelope_oracle(f, "quasiconvex") == env
    # f_c <= f_q <= f
    assert numpy.all(convex_envelope(f).values <= env.values + 1e-12)


@settings(max_examples=100, deadline=None)
@given(rows, st.data())
def test_greatest_minorant(values, data):
    f = sampled(values)
    dent = data.draw(
        st.lists(st.floats(0.0, 5.0), min_size=len(values), max_size=len(values))
    )
    g = quasiconvex_envelope(f.with_values(f.values - numpy.array(dent)))
    assert numpy.all(g.values <= quasiconvex_envelope(f).values)


def test_oracle_rejects_lsc():
    with pytest.raises(eqreg.UsageError):
        envelope_oracle(sampled([0.0, 1.0]), "lsc")


if __name__ == "__main__":
    test_convex_envelope()
