"""Graph and low-rank regularized localization (GLRR-CL) over a sliding window.

Every tick the GR-CL estimate and the degree-scaled differential coordinates
are pushed into a window of τ ticks. Once the window is full, the rank-bounded
least-squares problem

    argmin_X ‖L̃X − B‖_F²  subject to  rank(X) ≤ s

is solved in closed form from the SVD of L̃ = U·S·Vᵀ:
X = V·S⁻¹·trunc_s(U_Nᵀ·B), where U_N holds the first N left singular vectors.
Only the newest column of X is reported.
"""

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Deque, Optional, Sequence

import numpy as np

from cooploc.engine.events import EventBus, GraphRebuiltEvent
from cooploc.errors import ConfigError, RankDeficiencyError, WindowNotReady
from cooploc.network.anchors import AnchoredLaplacian, extend_with_anchors
from cooploc.network.graph import GraphSnapshot
from cooploc.numerics.linalg import SvdFactors, svd, svt_truncate
from cooploc.sensing.differential import DifferentialCoords
from cooploc.sensing.observation import TickObservation, observe_ticks
from cooploc.systems.estimate import EstimateSource, PositionEstimate
from cooploc.systems.gr_cl import GraphRegularizedLocalizer

if TYPE_CHECKING:
    from cooploc.data.config_loader import ExperimentConfig

WINDOW_MODES = ("rebuild", "strict")
WINDOW_ANCHOR_SOURCES = ("gr-cl", "gps")


@dataclass(frozen=True, eq=False)
class WindowEntry:
    """What the fusion center stores about one tick."""

    delta: DifferentialCoords
    degrees: np.ndarray
    anchors: PositionEstimate


@dataclass(frozen=True, eq=False)
class BatchWindow:
    """2N×τ matrices B_x, B_y; columns run oldest to newest."""

    b_x: np.ndarray
    b_y: np.ndarray

    @property
    def length(self) -> int:
        """Window length τ."""
        return self.b_x.shape[1]

    @property
    def n_vehicles(self) -> int:
        """Number of vehicles N."""
        return self.b_x.shape[0] // 2


@dataclass(frozen=True, eq=False)
class LowRankEstimate:
    """Rank-bounded N×τ coordinate matrices of one window."""

    x: np.ndarray
    y: np.ndarray
    rank: int

    def latest(self) -> PositionEstimate:
        """Newest column as the estimate of the current tick."""
        return PositionEstimate.uniform(
            self.x[:, -1].copy(), self.y[:, -1].copy(), EstimateSource.LOW_RANK
        )


def build_window(history: Sequence[WindowEntry], length: int) -> BatchWindow:
    """Stack the newest τ entries of a history into B_x and B_y.

    Column t holds [d·δ ; anchor coordinates] of the t-th oldest tick.

    Raises:
        ConfigError: If the window length is not positive
        WindowNotReady: If fewer than τ entries are available
    """
    if length < 1:
        raise ConfigError(f"Window length must be ≥ 1, got {length}")
    if len(history) < length:
        raise WindowNotReady(len(history), length)

    entries = list(history)[-length:]
    columns_x = []
    columns_y = []
    for entry in entries:
        scaled_x, scaled_y = entry.delta.scaled(entry.degrees)
        columns_x.append(np.concatenate([scaled_x, entry.anchors.x]))
        columns_y.append(np.concatenate([scaled_y, entry.anchors.y]))
    return BatchWindow(b_x=np.column_stack(columns_x), b_y=np.column_stack(columns_y))


def _recover_axis(b: np.ndarray, factors: SvdFactors, rank: int) -> np.ndarray:
    """X = V·S⁻¹·trunc_s(U_Nᵀ·B) for one coordinate axis."""
    n = factors.v.shape[0]
    w = factors.u[:, :n].T @ b
    return factors.v @ (svt_truncate(w, rank) / factors.s[:, np.newaxis])


def recover(window: BatchWindow, factors: SvdFactors, rank: int) -> LowRankEstimate:
    """Solve the rank-bounded window problem in closed form.

    Args:
        window: Stacked measurements of τ ticks
        factors: Full SVD of the 2N×N anchored Laplacian
        rank: Rank bound s, 1 ≤ s ≤ min(N, τ)

    Returns:
        LowRankEstimate with N×τ matrices X and Y

    Raises:
        ConfigError: If the rank bound or factor shapes do not fit the window
        RankDeficiencyError: If L̃ does not have full column rank
    """
    n = window.n_vehicles
    if factors.shape != (2 * n, n):
        raise ConfigError(f"SVD of shape {factors.shape} does not match a {n}-vehicle window")
    limit = min(n, window.length)
    if not 1 <= rank <= limit:
        raise ConfigError(f"Rank bound must be within 1..{limit}, got {rank}")
    if not factors.has_full_column_rank():
        raise RankDeficiencyError("Anchored Laplacian is singular; S cannot be inverted")

    return LowRankEstimate(
        x=_recover_axis(window.b_x, factors, rank),
        y=_recover_axis(window.b_y, factors, rank),
        rank=rank,
    )


def window_objective(laplacian: np.ndarray, x: np.ndarray, b: np.ndarray) -> float:
    """‖L̃X − B‖_F²."""
    return float(np.sum((laplacian @ x - b) ** 2))


class LowRankLocalizer:
    """Sequential GLRR-CL accumulator for one experiment run.

    In ``rebuild`` mode the graph (and the SVD of its anchored Laplacian) is
    frozen at the start of an epoch and rebuilt, with a fresh warmup, when the
    edge set changes. In ``strict`` mode the first graph is kept for the whole
    run. Until the window is full the GR-CL estimate is returned, flagged as
    warmup.
    """

    name = "glrr-cl"

    def __init__(
        self,
        window: int,
        rank: int,
        mode: str = "rebuild",
        window_anchors: str = "gr-cl",
        gr_cl: Optional[GraphRegularizedLocalizer] = None,
        event_bus: Optional[EventBus] = None,
    ):
        """Initialize GLRR-CL localizer.

        Args:
            window: Window length τ
            rank: Rank bound s
            mode: "rebuild" or "strict" graph handling
            window_anchors: Anchor rows of B: "gr-cl" estimates or raw "gps"
            gr_cl: Per-tick estimator feeding the window (default: all-GPS anchors)
            event_bus: Bus receiving graph rebuild events
        """
        if window < 1:
            raise ConfigError(f"Window length must be ≥ 1, got {window}")
        if rank < 1:
            raise ConfigError(f"Rank bound must be ≥ 1, got {rank}")
        if mode not in WINDOW_MODES:
            raise ConfigError(f"Window mode must be one of {WINDOW_MODES}, got {mode!r}")
        if window_anchors not in WINDOW_ANCHOR_SOURCES:
            raise ConfigError(
                f"Window anchors must be one of {WINDOW_ANCHOR_SOURCES}, got {window_anchors!r}"
            )
        self.window = window
        self.rank = rank
        self.mode = mode
        self.window_anchors = window_anchors
        self.gr_cl = gr_cl or GraphRegularizedLocalizer(event_bus=event_bus)
        self.event_bus = event_bus
        self.history: Deque[WindowEntry] = deque(maxlen=window)
        self.graph: Optional[GraphSnapshot] = None
        self.laplacian: Optional[AnchoredLaplacian] = None
        self.factors: Optional[SvdFactors] = None

    def reset(self) -> None:
        """Drop the window and the frozen graph."""
        self.history.clear()
        self.graph = None
        self.laplacian = None
        self.factors = None

    def _start_epoch(self, graph: GraphSnapshot) -> None:
        """Freeze a graph, factor its anchored Laplacian and restart warmup."""
        self.graph = graph
        self.laplacian = extend_with_anchors(graph, range(graph.n_vertices))
        self.factors = svd(self.laplacian.matrix)
        self.history.clear()

    def step(
        self,
        observation: TickObservation,
        gr_cl_estimate: Optional[PositionEstimate] = None,
    ) -> PositionEstimate:
        """Push one tick into the window and estimate the current positions.

        Args:
            observation: Observed tick
            gr_cl_estimate: GR-CL result of the same tick, computed if omitted

        Returns:
            Newest column of the low-rank solution, or the GR-CL estimate
            flagged as warmup while the window fills
        """
        if gr_cl_estimate is None:
            gr_cl_estimate = self.gr_cl.step(observation)

        graph = observation.graph
        if self.graph is None:
            self._start_epoch(graph)
        elif self.mode == "rebuild" and not self.graph.same_edges(graph):
            self._start_epoch(graph)
            if self.event_bus is not None:
                self.event_bus.emit(
                    GraphRebuiltEvent(tick=observation.tick, edge_count=len(graph.edges))
                )

        if self.window_anchors == "gps":
            gps = observation.measurements.gps
            anchors = PositionEstimate.uniform(gps[:, 0], gps[:, 1], EstimateSource.GPS_FALLBACK)
        else:
            anchors = gr_cl_estimate
        self.history.append(WindowEntry(observation.delta, graph.degrees, anchors))

        if len(self.history) < self.window:
            return gr_cl_estimate.relabeled(EstimateSource.WARMUP)

        window = build_window(self.history, self.window)
        return recover(window, self.factors, self.rank).latest()

    @classmethod
    def from_config(
        cls, config: "ExperimentConfig", event_bus: Optional[EventBus] = None
    ) -> "LowRankLocalizer":
        """Build the localizer described by an experiment config."""
        gr_cl = GraphRegularizedLocalizer(
            anchor_ids=config.anchors, anchor_weight=config.anchor_weight, event_bus=event_bus
        )
        return cls(
            window=config.window,
            rank=config.rank,
            mode=config.window_mode,
            window_anchors=config.window_anchors,
            gr_cl=gr_cl,
            event_bus=event_bus,
        )


def run_glrr(
    config: "ExperimentConfig",
    seed: Optional[int] = None,
    event_bus: Optional[EventBus] = None,
) -> list[PositionEstimate]:
    """Run GLRR-CL over every tick of one simulated scenario.

    Args:
        config: Experiment config (fleet or trajectory file, noise, τ, s)
        seed: Scenario seed; config.seed when omitted
        event_bus: Bus receiving fallback and rebuild events

    Returns:
        One estimate per tick; the first τ−1 are GR-CL flagged as warmup
    """
    from cooploc.data.scenario import build_trajectory, measurement_rng

    seed = config.seed if seed is None else seed
    trajectory = build_trajectory(config, seed)
    localizer = LowRankLocalizer.from_config(config, event_bus)
    observations = observe_ticks(
        trajectory, config.noise, config.radius, config.max_degree, measurement_rng(seed)
    )
    return [localizer.step(observation) for observation in observations]
