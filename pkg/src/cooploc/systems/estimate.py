"""Per-tick position estimates and their provenance flags."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from cooploc.errors import ConfigError


class EstimateSource(Enum):
    """How a vehicle's position was obtained."""

    SOLVED = "solved"
    GPS_FALLBACK = "gps-fallback"
    WARMUP = "warmup"
    LOW_RANK = "low-rank"


@dataclass(frozen=True, eq=False)
class PositionEstimate:
    """Estimated coordinates of all N vehicles at one tick."""

    x: np.ndarray
    y: np.ndarray
    sources: tuple[EstimateSource, ...]

    def __post_init__(self):
        """Check one finite entry per vehicle."""
        n = len(self.sources)
        if np.shape(self.x) != (n,) or np.shape(self.y) != (n,):
            raise ConfigError("Estimate needs one x, y and source per vehicle")
        if not (np.all(np.isfinite(self.x)) and np.all(np.isfinite(self.y))):
            raise ConfigError("Estimate has non-finite coordinates")

    @classmethod
    def uniform(cls, x: np.ndarray, y: np.ndarray, source: EstimateSource) -> "PositionEstimate":
        """Estimate whose vehicles all share one source flag."""
        return cls(x=np.asarray(x, dtype=float), y=np.asarray(y, dtype=float), sources=(source,) * len(x))

    @property
    def n_vehicles(self) -> int:
        """Number of vehicles."""
        return len(self.sources)

    def positions(self) -> np.ndarray:
        """Estimates as an (N, 2) array."""
        return np.column_stack([self.x, self.y])

    def relabeled(self, source: EstimateSource) -> "PositionEstimate":
        """Same coordinates with every flag replaced."""
        return PositionEstimate(x=self.x, y=self.y, sources=(source,) * self.n_vehicles)

    def squared_errors(self, truth: np.ndarray) -> np.ndarray:
        """‖estimate − truth‖² per vehicle for an (N, 2) truth array."""
        truth = np.asarray(truth, dtype=float)
        return (self.x - truth[:, 0]) ** 2 + (self.y - truth[:, 1]) ** 2

    def vehicles_with(self, source: EstimateSource) -> list[int]:
        """Ids of vehicles carrying the given flag."""
        return [i for i, flag in enumerate(self.sources) if flag is source]
