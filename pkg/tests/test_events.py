"""Tests for event system."""

from cooploc.engine.events import (
    EventBus,
    GpsFallbackEvent,
    GraphRebuiltEvent,
    ReportWrittenEvent,
    TrialCompletedEvent,
    TrialStartedEvent,
)


def test_event_bus_creation():
    """EventBus can be created."""
    bus = EventBus()
    assert len(bus.subscribers) == 0


def test_subscribe_to_event():
    """Can subscribe to an event type."""
    bus = EventBus()
    bus.subscribe("trial_started", lambda e: None)
    assert "trial_started" in bus.subscribers


def test_emit_event_calls_subscriber():
    """Emitting event calls subscribed callback."""
    bus = EventBus()
    received_events = []
    bus.subscribe("trial_started", received_events.append)
    bus.emit(TrialStartedEvent(trial=0, seed=42))
    assert len(received_events) == 1


def test_emit_only_reaches_matching_type():
    """Subscribers of other types are not called."""
    bus = EventBus()
    received_events = []
    bus.subscribe("graph_rebuilt", received_events.append)
    bus.emit(TrialStartedEvent(trial=0, seed=0))
    assert received_events == []


def test_multiple_subscribers():
    """All subscribers of a type are notified."""
    bus = EventBus()
    first, second = [], []
    bus.subscribe("report_written", first.append)
    bus.subscribe("report_written", second.append)
    bus.emit(ReportWrittenEvent(path="out/summary.json"))
    assert len(first) == len(second) == 1


def test_emit_without_subscribers():
    """Emitting with no subscribers is fine."""
    EventBus().emit(GraphRebuiltEvent(tick=3, edge_count=10))


def test_trial_events_carry_data():
    """Trial events expose their fields and data dict."""
    started = TrialStartedEvent(trial=2, seed=5)
    assert started.type == "trial_started"
    assert started.data == {"trial": 2, "seed": 5}

    completed = TrialCompletedEvent(trial=2, msle={"gps": 15.0})
    assert completed.type == "trial_completed"
    assert completed.msle == {"gps": 15.0}


def test_tick_events_carry_data():
    """Graph and fallback events expose the tick."""
    rebuilt = GraphRebuiltEvent(tick=4, edge_count=12)
    assert rebuilt.data == {"tick": 4, "edge_count": 12}

    fallback = GpsFallbackEvent(tick=9, vehicle_ids=[1, 3])
    assert fallback.type == "gps_fallback"
    assert fallback.vehicle_ids == [1, 3]
