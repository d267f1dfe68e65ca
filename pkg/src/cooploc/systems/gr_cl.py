"""Graph-regularized cooperative localization (GR-CL), one tick at a time."""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from cooploc.engine.events import EventBus, GpsFallbackEvent
from cooploc.network.anchors import AnchoredLaplacian, extend_with_anchors
from cooploc.network.graph import GraphSnapshot, connected_components
from cooploc.numerics.linalg import least_squares
from cooploc.sensing.differential import DifferentialCoords, differential_coords
from cooploc.sensing.measurements import MeasurementSet
from cooploc.sensing.observation import TickObservation
from cooploc.systems.estimate import EstimateSource, PositionEstimate
from cooploc.utils.position import Point

Anchor = tuple[int, Point]


@dataclass(frozen=True, eq=False)
class AnchoredSystem:
    """The pair of systems L̃x = b_x and L̃y = b_y of one tick.

    Rows 0..N−1 of b hold d_i·δ_i; rows N.. hold the anchor coordinates in
    anchor order, scaled like the anchor rows of L̃.
    """

    laplacian: AnchoredLaplacian
    b_x: np.ndarray
    b_y: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        """L̃ as a dense (N+α)×N array."""
        return self.laplacian.matrix

    def residual(self, x: np.ndarray, y: np.ndarray) -> float:
        """Largest absolute residual of either system at (x, y)."""
        return float(
            max(
                np.max(np.abs(self.matrix @ x - self.b_x)),
                np.max(np.abs(self.matrix @ y - self.b_y)),
            )
        )


def assemble_system(
    delta: DifferentialCoords,
    graph: GraphSnapshot,
    anchors: Sequence[Anchor],
    anchor_weight: float = 1.0,
) -> AnchoredSystem:
    """Stack degree-scaled differential coordinates over anchor coordinates.

    Args:
        delta: Differential coordinates of the graph's vehicles
        graph: Graph the coordinates were computed on
        anchors: (vehicle id, absolute position) pairs, in row order
        anchor_weight: Scale applied to anchor rows and values

    Returns:
        AnchoredSystem ready for solve_gr_cl

    Raises:
        ConfigError: If anchors are empty or an anchor id is out of range
    """
    laplacian = extend_with_anchors(graph, [vehicle for vehicle, _ in anchors], anchor_weight)
    scaled_x, scaled_y = delta.scaled(graph.degrees)
    anchor_x = np.array([point.x for _, point in anchors]) * laplacian.anchor_weight
    anchor_y = np.array([point.y for _, point in anchors]) * laplacian.anchor_weight
    return AnchoredSystem(
        laplacian=laplacian,
        b_x=np.concatenate([scaled_x, anchor_x]),
        b_y=np.concatenate([scaled_y, anchor_y]),
    )


def solve_gr_cl(system: AnchoredSystem) -> PositionEstimate:
    """Least-squares solution of both anchored systems.

    Raises:
        RankDeficiencyError: If some connected component carries no anchor
    """
    solution = least_squares(system.matrix, np.column_stack([system.b_x, system.b_y]))
    return PositionEstimate.uniform(solution[:, 0], solution[:, 1], EstimateSource.SOLVED)


def localize_tick(
    graph: GraphSnapshot,
    measurements: MeasurementSet,
    delta: Optional[DifferentialCoords] = None,
    anchor_ids: Optional[Sequence[int]] = None,
    anchor_weight: float = 1.0,
) -> PositionEstimate:
    """Run GR-CL on every connected component of one tick's graph.

    Components with at least two vehicles and at least one anchor are solved
    on their own; isolated vehicles and unanchored components keep their GPS
    fix and are flagged as fallback. Anchors take the noisy GPS positions.

    Args:
        graph: Connectivity graph of the tick
        measurements: GPS, range and azimuth measurements of the tick
        delta: Precomputed differential coordinates (computed if omitted)
        anchor_ids: Anchor vehicles; all vehicles when omitted
        anchor_weight: Scale of anchor rows

    Returns:
        PositionEstimate with per-vehicle source flags
    """
    if delta is None:
        delta = differential_coords(measurements, graph)
    if anchor_ids is None:
        anchor_ids = range(graph.n_vertices)
    anchor_order = list(anchor_ids)

    gps = measurements.gps
    x = gps[:, 0].copy()
    y = gps[:, 1].copy()
    sources = [EstimateSource.GPS_FALLBACK] * graph.n_vertices

    for component in connected_components(graph):
        if component.is_isolated:
            continue
        members = list(component.vertices)
        local = {vehicle: k for k, vehicle in enumerate(members)}
        anchors = [
            (local[vehicle], Point.of(gps[vehicle]))
            for vehicle in anchor_order
            if vehicle in local
        ]
        if not anchors:
            continue

        system = assemble_system(
            delta.restricted(members), graph.subgraph(members), anchors, anchor_weight
        )
        solved = solve_gr_cl(system)
        x[members] = solved.x
        y[members] = solved.y
        for vehicle in members:
            sources[vehicle] = EstimateSource.SOLVED

    return PositionEstimate(x=x, y=y, sources=tuple(sources))


class GraphRegularizedLocalizer:
    """Stateless per-tick GR-CL estimator."""

    name = "gr-cl"

    def __init__(
        self,
        anchor_ids: Optional[Sequence[int]] = None,
        anchor_weight: float = 1.0,
        event_bus: Optional[EventBus] = None,
    ):
        """Initialize GR-CL localizer.

        Args:
            anchor_ids: Anchor vehicles (None = every vehicle)
            anchor_weight: Scale of anchor rows
            event_bus: Bus receiving GPS fallback events
        """
        self.anchor_ids = None if anchor_ids is None else list(anchor_ids)
        self.anchor_weight = anchor_weight
        self.event_bus = event_bus

    def reset(self) -> None:
        """Nothing is carried between ticks."""

    def step(self, observation: TickObservation) -> PositionEstimate:
        """Localize all vehicles of one observed tick."""
        estimate = localize_tick(
            observation.graph,
            observation.measurements,
            observation.delta,
            self.anchor_ids,
            self.anchor_weight,
        )
        fallback = estimate.vehicles_with(EstimateSource.GPS_FALLBACK)
        if fallback and self.event_bus is not None:
            self.event_bus.emit(GpsFallbackEvent(tick=observation.tick, vehicle_ids=fallback))
        return estimate
