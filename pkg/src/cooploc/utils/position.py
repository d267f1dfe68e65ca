"""Planar point utilities for vehicle coordinates."""

import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Point:
    """Immutable 2D point in meters."""

    x: float
    y: float

    @classmethod
    def of(cls, coords: Sequence[float]) -> "Point":
        """Build a point from any length-2 sequence or array."""
        return cls(float(coords[0]), float(coords[1]))

    def is_finite(self) -> bool:
        """Check that both coordinates are finite numbers."""
        return math.isfinite(self.x) and math.isfinite(self.y)
