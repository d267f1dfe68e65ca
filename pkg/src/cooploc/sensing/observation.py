"""Tick-by-tick simulation of what the fusion center observes."""

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from cooploc.fleet.trajectory import FleetTrajectory
from cooploc.network.graph import GraphSnapshot, build_connectivity
from cooploc.sensing.differential import DifferentialCoords, differential_coords
from cooploc.sensing.measurements import MeasurementSet, measure_all
from cooploc.sensing.noise import NoiseParams


@dataclass(frozen=True, eq=False)
class TickObservation:
    """Ground truth plus the graph and measurements of one tick."""

    tick: int
    truth: np.ndarray
    graph: GraphSnapshot
    measurements: MeasurementSet
    delta: DifferentialCoords


def observe_tick(
    tick: int,
    truth: np.ndarray,
    noise: NoiseParams,
    radius: float,
    max_degree: int,
    rng: np.random.Generator,
) -> TickObservation:
    """Build the graph, measure it and estimate differential coordinates."""
    graph = build_connectivity(truth, radius, max_degree)
    measurements = measure_all(truth, graph, noise, rng)
    return TickObservation(
        tick=tick,
        truth=truth,
        graph=graph,
        measurements=measurements,
        delta=differential_coords(measurements, graph),
    )


def observe_ticks(
    trajectory: FleetTrajectory,
    noise: NoiseParams,
    radius: float,
    max_degree: int,
    rng: np.random.Generator,
) -> Iterator[TickObservation]:
    """Yield one observation per tick of a trajectory, oldest first."""
    for tick in range(trajectory.n_ticks):
        yield observe_tick(tick, trajectory.positions(tick), noise, radius, max_degree, rng)
