"""Event system for decoupled experiment progress reporting."""

from dataclasses import dataclass
from typing import Any, Callable


@dataclass
class Event:
    """Base event class."""

    type: str
    data: dict[str, Any]


@dataclass
class TrialStartedEvent(Event):
    """A Monte-Carlo trial is about to run."""

    def __init__(self, trial: int, seed: int):
        """Initialize trial started event.

        Args:
            trial: Zero-based trial index
            seed: Seed derived for this trial
        """
        self.type = "trial_started"
        self.trial = trial
        self.seed = seed
        self.data = {"trial": trial, "seed": seed}


@dataclass
class TrialCompletedEvent(Event):
    """A Monte-Carlo trial finished."""

    def __init__(self, trial: int, msle: dict[str, float]):
        """Initialize trial completed event.

        Args:
            trial: Zero-based trial index
            msle: Mean square localization error of the trial, per method
        """
        self.type = "trial_completed"
        self.trial = trial
        self.msle = msle
        self.data = {"trial": trial, "msle": msle}


@dataclass
class GraphRebuiltEvent(Event):
    """The windowed estimator started a new graph epoch."""

    def __init__(self, tick: int, edge_count: int):
        """Initialize graph rebuilt event.

        Args:
            tick: Tick at which the edge set changed
            edge_count: Number of undirected edges of the new graph
        """
        self.type = "graph_rebuilt"
        self.tick = tick
        self.edge_count = edge_count
        self.data = {"tick": tick, "edge_count": edge_count}


@dataclass
class GpsFallbackEvent(Event):
    """Some vehicles could not be solved and kept their GPS fix."""

    def __init__(self, tick: int, vehicle_ids: list[int]):
        """Initialize GPS fallback event.

        Args:
            tick: Tick of the fallback
            vehicle_ids: Vehicles left at their raw GPS position
        """
        self.type = "gps_fallback"
        self.tick = tick
        self.vehicle_ids = vehicle_ids
        self.data = {"tick": tick, "vehicle_ids": vehicle_ids}


@dataclass
class ReportWrittenEvent(Event):
    """An output file was written."""

    def __init__(self, path: str):
        """Initialize report written event."""
        self.type = "report_written"
        self.path = path
        self.data = {"path": path}


class EventBus:
    """Simple event bus for pub/sub pattern."""

    def __init__(self):
        """Initialize event bus."""
        self.subscribers: dict[str, list[Callable[[Event], None]]] = {}

    def subscribe(self, event_type: str, callback: Callable[[Event], None]) -> None:
        """Subscribe to an event type.

        Args:
            event_type: Type of event to subscribe to
            callback: Callback function to call when event is emitted
        """
        self.subscribers.setdefault(event_type, []).append(callback)

    def emit(self, event: Event) -> None:
        """Emit an event to all subscribers of its type."""
        for callback in self.subscribers.get(event.type, []):
            callback(event)
