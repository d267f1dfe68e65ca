"""Noisy GPS, range and azimuth measurements of one tick."""

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from cooploc.errors import ConfigError
from cooploc.fleet.vehicle import VehiclePose
from cooploc.network.graph import Edge, GraphSnapshot
from cooploc.sensing.noise import NoiseParams
from cooploc.utils.angles import wrap_array_to_two_pi, wrap_to_two_pi
from cooploc.utils.position import Point


def true_azimuth(observer: Point, target: Point) -> float:
    """Clockwise-from-north bearing from observer to target.

    The returned angle az ∈ [0, 2π) satisfies ``Δx = d·sin(az)`` and
    ``Δy = d·cos(az)``.

    Raises:
        ConfigError: If the points coincide or are not finite
    """
    if not (observer.is_finite() and target.is_finite()):
        raise ConfigError("Azimuth endpoints must be finite")
    dx = target.x - observer.x
    dy = target.y - observer.y
    if dx == 0.0 and dy == 0.0:
        raise ConfigError(f"Azimuth undefined for coincident points {observer}")
    return wrap_to_two_pi(math.atan2(dx, dy))


@dataclass(frozen=True, eq=False)
class MeasurementSet:
    """Everything the fusion center receives at one tick.

    Relative measurements are kept as parallel arrays over directed edges:
    ``pairs[k] = (i, j)`` means vehicle i measured vehicle j with range
    ``ranges[k]`` and azimuth ``azimuths[k]``.
    """

    gps: np.ndarray
    pairs: np.ndarray
    ranges: np.ndarray
    azimuths: np.ndarray
    _index: dict[Edge, int] = field(init=False, repr=False)

    def __post_init__(self):
        """Index directed edges."""
        index = {(int(i), int(j)): k for k, (i, j) in enumerate(self.pairs)}
        object.__setattr__(self, "_index", index)

    @property
    def n_vehicles(self) -> int:
        """Number of GPS fixes."""
        return self.gps.shape[0]

    def has_edge(self, observer: int, target: int) -> bool:
        """Check whether observer measured target."""
        return (observer, target) in self._index

    def edge_index(self, observer: int, target: int) -> int:
        """Row of the (observer, target) measurement.

        Raises:
            KeyError: If that direction was not measured
        """
        return self._index[(observer, target)]

    def range_of(self, observer: int, target: int) -> float:
        """Noisy range from observer to target."""
        return float(self.ranges[self._index[(observer, target)]])

    def azimuth_of(self, observer: int, target: int) -> float:
        """Noisy azimuth from observer to target."""
        return float(self.azimuths[self._index[(observer, target)]])

    @property
    def ranges_by_edge(self) -> dict[Edge, float]:
        """Ranges keyed by directed edge."""
        return {pair: float(self.ranges[k]) for pair, k in self._index.items()}

    @property
    def azimuths_by_edge(self) -> dict[Edge, float]:
        """Azimuths keyed by directed edge."""
        return {pair: float(self.azimuths[k]) for pair, k in self._index.items()}


def as_positions(truth: np.ndarray | Sequence[VehiclePose]) -> np.ndarray:
    """Coerce poses or an (N, 2) array into an (N, 2) float array."""
    if len(truth) and isinstance(truth[0], VehiclePose):
        return np.array([[pose.x, pose.y] for pose in truth], dtype=float)
    return np.asarray(truth, dtype=float).reshape(-1, 2)


def measure_all(
    truth: np.ndarray | Sequence[VehiclePose],
    graph: GraphSnapshot,
    noise: NoiseParams,
    rng: np.random.Generator,
) -> MeasurementSet:
    """Simulate one tick of GPS, range and azimuth measurements.

    Both directions of every edge are measured with independent noise.
    Draw order is fixed (ranges, azimuths, then GPS x/y per vehicle), so a
    seeded generator reproduces the set bitwise.

    Args:
        truth: True positions, (N, 2) array or N poses
        graph: Connectivity of the same N vehicles
        noise: Noise deviations
        rng: Random generator owned by the caller

    Returns:
        MeasurementSet with ranges clamped at 0 and azimuths in [0, 2π)
    """
    positions = as_positions(truth)
    if positions.shape[0] != graph.n_vertices:
        raise ConfigError(
            f"Graph has {graph.n_vertices} vertices but {positions.shape[0]} positions given"
        )

    pairs = np.array(graph.directed_edges(), dtype=int).reshape(-1, 2)
    observers, targets = pairs[:, 0], pairs[:, 1]
    dx = positions[targets, 0] - positions[observers, 0]
    dy = positions[targets, 1] - positions[observers, 1]

    edge_count = len(pairs)
    range_noise = noise.sigma_d * rng.standard_normal(edge_count)
    azimuth_noise = noise.sigma_az * rng.standard_normal(edge_count)
    gps_noise = rng.standard_normal(positions.shape) * np.array([noise.sigma_x, noise.sigma_y])

    ranges = np.maximum(np.hypot(dx, dy) + range_noise, 0.0)
    azimuths = wrap_array_to_two_pi(wrap_array_to_two_pi(np.arctan2(dx, dy)) + azimuth_noise)

    return MeasurementSet(
        gps=positions + gps_noise,
        pairs=pairs,
        ranges=ranges,
        azimuths=azimuths,
    )
