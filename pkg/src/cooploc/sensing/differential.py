"""Differential coordinates estimated from range and azimuth measurements."""

from dataclasses import dataclass

import numpy as np

from cooploc.errors import ConfigError
from cooploc.network.graph import GraphSnapshot
from cooploc.sensing.measurements import MeasurementSet


@dataclass(frozen=True, eq=False)
class DifferentialCoords:
    """Per-vehicle offset from the mean of its neighbours (m).

    Isolated vehicles carry 0 in both coordinates.
    """

    dx: np.ndarray
    dy: np.ndarray

    def scaled(self, degrees: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Degree-scaled coordinates (d_i·δx_i, d_i·δy_i)."""
        return degrees * self.dx, degrees * self.dy

    def restricted(self, vertices: list[int]) -> "DifferentialCoords":
        """Coordinates of a subset of vehicles, in the given order."""
        return DifferentialCoords(dx=self.dx[vertices], dy=self.dy[vertices])


def differential_coords(meas: MeasurementSet, graph: GraphSnapshot) -> DifferentialCoords:
    """Estimate δ_i = (1/d_i)·Σ_j −z̃_d,ij·(sin z̃_az,ij, cos z̃_az,ij).

    Args:
        meas: Measurements covering both directions of every graph edge
        graph: Graph defining N(i) and d_i

    Returns:
        DifferentialCoords, zero for isolated vehicles

    Raises:
        ConfigError: If a graph edge has no measurement
    """
    n = graph.n_vertices
    pairs = graph.directed_edges()
    try:
        rows = np.array([meas.edge_index(i, j) for i, j in pairs], dtype=int)
    except KeyError as missing:
        raise ConfigError(f"No measurement for edge {missing.args[0]}") from None

    sum_x = np.zeros(n)
    sum_y = np.zeros(n)
    if rows.size:
        observers = np.array([i for i, _ in pairs], dtype=int)
        ranges = meas.ranges[rows]
        azimuths = meas.azimuths[rows]
        np.add.at(sum_x, observers, -ranges * np.sin(azimuths))
        np.add.at(sum_y, observers, -ranges * np.cos(azimuths))

    degrees = graph.degrees
    connected = degrees > 0
    dx = np.zeros(n)
    dy = np.zeros(n)
    dx[connected] = sum_x[connected] / degrees[connected]
    dy[connected] = sum_y[connected] / degrees[connected]
    return DifferentialCoords(dx=dx, dy=dy)
