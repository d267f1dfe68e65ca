"""Tests for Point and angle utilities."""

import math

import numpy as np
import pytest

from cooploc.utils.angles import TWO_PI, wrap_array_to_two_pi, wrap_to_two_pi
from cooploc.utils.position import Point


def test_point_creation():
    """Point stores its coordinates."""
    point = Point(5.0, 10.0)
    assert point.x == 5.0
    assert point.y == 10.0


def test_point_of_array():
    """Point can be built from a numpy row."""
    point = Point.of(np.array([1.5, -2.0]))
    assert point == Point(1.5, -2.0)
    assert isinstance(point.x, float)


def test_point_is_finite():
    """Points with NaN or inf are not finite."""
    assert Point(1.0, 2.0).is_finite()
    assert not Point(math.nan, 0.0).is_finite()
    assert not Point(0.0, math.inf).is_finite()


def test_wrap_negative_angle():
    """Negative angles wrap into [0, 2π)."""
    assert wrap_to_two_pi(-math.pi / 2) == pytest.approx(1.5 * math.pi)


def test_wrap_full_turn_is_zero():
    """A full turn wraps to zero."""
    assert wrap_to_two_pi(TWO_PI) == 0.0


def test_wrap_tiny_negative_stays_below_two_pi():
    """A tiny negative angle never wraps to exactly 2π."""
    wrapped = wrap_to_two_pi(-1e-18)
    assert 0.0 <= wrapped < TWO_PI


def test_wrap_array_matches_scalar():
    """Vectorized wrap agrees with the scalar version."""
    angles = np.array([-7.0, -1e-18, 0.0, 3.0, TWO_PI, 13.0])
    wrapped = wrap_array_to_two_pi(angles)
    assert np.all((wrapped >= 0.0) & (wrapped < TWO_PI))
    np.testing.assert_allclose(wrapped, [wrap_to_two_pi(a) for a in angles], atol=1e-15)
