"""Angle helpers."""

import math

import numpy as np

TWO_PI = 2.0 * math.pi


def wrap_to_two_pi(angle: float) -> float:
    """Normalize an angle in radians into [0, 2π)."""
    wrapped = math.fmod(angle, TWO_PI)
    if wrapped < 0.0:
        wrapped += TWO_PI
    # adding 2π to a tiny negative remainder can round up to exactly 2π
    if wrapped >= TWO_PI:
        wrapped = 0.0
    return wrapped


def wrap_array_to_two_pi(angles: np.ndarray) -> np.ndarray:
    """Vectorized wrap_to_two_pi."""
    wrapped = np.mod(np.asarray(angles, dtype=float), TWO_PI)
    return np.where(wrapped >= TWO_PI, 0.0, wrapped)
