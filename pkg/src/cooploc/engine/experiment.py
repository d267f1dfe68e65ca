"""Monte-Carlo experiment engine running the estimators on paired trials."""

from dataclasses import dataclass
from typing import Optional

from cooploc.data.config_loader import ExperimentConfig
from cooploc.data.scenario import build_trajectory, measurement_rng, trial_seed
from cooploc.engine.events import (
    EventBus,
    GpsFallbackEvent,
    GraphRebuiltEvent,
    ReportWrittenEvent,
    TrialCompletedEvent,
    TrialStartedEvent,
)
from cooploc.engine.metrics import ErrorAccumulator, ErrorReport
from cooploc.errors import ConfigError
from cooploc.fleet.trajectory import FleetTrajectory
from cooploc.reporting.message_log import MessageLog
from cooploc.sensing.observation import observe_ticks
from cooploc.systems.estimate import EstimateSource
from cooploc.systems.glrr_cl import LowRankLocalizer
from cooploc.systems.gps import GpsLocalizer
from cooploc.systems.gr_cl import GraphRegularizedLocalizer
from cooploc.utils.protocols import TickLocalizer

BASELINE = "gps"


@dataclass(frozen=True, eq=False)
class ExperimentResult:
    """Reports of one run, keyed by method, GPS baseline first."""

    config: ExperimentConfig
    reports: dict[str, ErrorReport]
    trial_seeds: tuple[int, ...]

    @property
    def baseline(self) -> ErrorReport:
        """The raw-GPS report every reduction is measured against."""
        return self.reports[BASELINE]


class ExperimentEngine:
    """Runs every trial of an experiment and pools the errors."""

    def __init__(self, config: ExperimentConfig, event_bus: Optional[EventBus] = None):
        """Initialize the engine.

        Args:
            config: Validated experiment config
            event_bus: Bus for progress events (a private one if omitted)
        """
        self.config = config
        self.event_bus = event_bus or EventBus()
        self.message_log = MessageLog()
        self._setup_event_subscribers()

    @property
    def evaluated_methods(self) -> tuple[str, ...]:
        """Requested methods plus the GPS baseline, in canonical order."""
        requested = self.config.methods
        return (BASELINE,) + tuple(method for method in requested if method != BASELINE)

    def _setup_event_subscribers(self) -> None:
        """Set up event subscribers for the progress log."""
        self.event_bus.subscribe("trial_started", self._on_trial_started)
        self.event_bus.subscribe("trial_completed", self._on_trial_completed)
        self.event_bus.subscribe("graph_rebuilt", self._on_graph_rebuilt)
        self.event_bus.subscribe("gps_fallback", self._on_gps_fallback)
        self.event_bus.subscribe("report_written", self._on_report_written)

    def _on_trial_started(self, event: TrialStartedEvent) -> None:
        self.message_log.add_message(f"trial {event.trial} started (seed {event.seed})")

    def _on_trial_completed(self, event: TrialCompletedEvent) -> None:
        summary = ", ".join(f"{method} {value:.4f}" for method, value in event.msle.items())
        self.message_log.add_message(f"trial {event.trial} done: MSLE {summary}")

    def _on_graph_rebuilt(self, event: GraphRebuiltEvent) -> None:
        self.message_log.add_message(
            f"tick {event.tick}: graph changed ({event.edge_count} edges), window restarted"
        )

    def _on_gps_fallback(self, event: GpsFallbackEvent) -> None:
        self.message_log.add_message(
            f"tick {event.tick}: {len(event.vehicle_ids)} vehicle(s) kept GPS fix"
        )

    def _on_report_written(self, event: ReportWrittenEvent) -> None:
        self.message_log.add_message(f"wrote {event.path}")

    def _check_fleet(self, trajectory: FleetTrajectory) -> None:
        """Reject anchors and rank bounds that do not fit the fleet."""
        n = trajectory.n_vehicles
        anchors = self.config.anchors
        if anchors is not None and any(not 0 <= vehicle < n for vehicle in anchors):
            raise ConfigError(f"Anchor ids must lie within 0..{n - 1}, got {list(anchors)}")
        if "glrr-cl" in self.config.methods:
            limit = min(n, self.config.window)
            if self.config.rank > limit:
                raise ConfigError(f"rank must be within 1..{limit} (min of N and window)")
            if trajectory.n_ticks < self.config.window:
                raise ConfigError(
                    f"window {self.config.window} is longer than the {trajectory.n_ticks} ticks"
                )

    def run_trial(
        self,
        trial: int,
        accumulators: dict[str, ErrorAccumulator],
        trajectory: Optional[FleetTrajectory] = None,
    ) -> None:
        """Run one paired trial and append its errors to the accumulators.

        Every method sees the same trajectory and measurement draws. When
        GLRR-CL is evaluated, ticks where it is still warming up are skipped
        for every method.
        """
        config = self.config
        seed = trial_seed(config.seed, trial)
        self.event_bus.emit(TrialStartedEvent(trial=trial, seed=seed))

        if trajectory is None:
            trajectory = build_trajectory(config, seed)
        self._check_fleet(trajectory)

        methods = self.evaluated_methods
        gps: TickLocalizer = GpsLocalizer()
        gr_cl = None
        glrr_cl = None
        if "gr-cl" in methods or "glrr-cl" in methods:
            gr_cl = GraphRegularizedLocalizer(
                anchor_ids=config.anchors,
                anchor_weight=config.anchor_weight,
                event_bus=self.event_bus,
            )
        if "glrr-cl" in methods:
            glrr_cl = LowRankLocalizer(
                window=config.window,
                rank=config.rank,
                mode=config.window_mode,
                window_anchors=config.window_anchors,
                gr_cl=gr_cl,
                event_bus=self.event_bus,
            )

        for accumulator in accumulators.values():
            accumulator.start_trial()

        observations = observe_ticks(
            trajectory, config.noise, config.radius, config.max_degree, measurement_rng(seed)
        )
        for observation in observations:
            estimates = {BASELINE: gps.step(observation)}
            if gr_cl is not None:
                estimates["gr-cl"] = gr_cl.step(observation)
            if glrr_cl is not None:
                estimates["glrr-cl"] = glrr_cl.step(observation, estimates["gr-cl"])
                if EstimateSource.WARMUP in estimates["glrr-cl"].sources:
                    continue
            for method in methods:
                accumulators[method].add(estimates[method].squared_errors(observation.truth))

        msle = {method: accumulators[method].trial_msle() for method in methods}
        self.event_bus.emit(TrialCompletedEvent(trial=trial, msle=msle))

    def run(self) -> ExperimentResult:
        """Run all trials sequentially.

        Returns:
            ExperimentResult with one ErrorReport per evaluated method

        Raises:
            ConfigError: If the config does not fit the fleet
            TrajectoryParseError: If the trajectory file is malformed
            RankDeficiencyError: If a window Laplacian cannot be inverted
            OSError: If the trajectory file cannot be read
        """
        config = self.config
        accumulators = {method: ErrorAccumulator(method) for method in self.evaluated_methods}

        # a loaded trajectory is identical for every trial
        shared = None
        if config.trajectory_file is not None:
            shared = build_trajectory(config, config.seed)

        for trial in range(config.trials):
            self.run_trial(trial, accumulators, shared)

        return ExperimentResult(
            config=config,
            reports={method: accumulator.build() for method, accumulator in accumulators.items()},
            trial_seeds=tuple(trial_seed(config.seed, t) for t in range(config.trials)),
        )


def run_experiment(
    config: ExperimentConfig, event_bus: Optional[EventBus] = None
) -> ExperimentResult:
    """Run a full Monte-Carlo experiment.

    Trial t uses the derived seed ``config.seed ^ t`` for both its fleet and
    its measurement noise, so the same config always gives the same reports.
    """
    return ExperimentEngine(config, event_bus).run()
