"""Raw GPS baseline."""

from cooploc.sensing.observation import TickObservation
from cooploc.systems.estimate import EstimateSource, PositionEstimate


class GpsLocalizer:
    """Reports every vehicle at its noisy GPS fix."""

    name = "gps"

    def reset(self) -> None:
        """Nothing is carried between ticks."""

    def step(self, observation: TickObservation) -> PositionEstimate:
        """Return the GPS measurements of the tick."""
        gps = observation.measurements.gps
        return PositionEstimate.uniform(
            gps[:, 0].copy(), gps[:, 1].copy(), EstimateSource.GPS_FALLBACK
        )
