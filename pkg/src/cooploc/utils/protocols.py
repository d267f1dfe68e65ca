"""Protocol definitions for decoupling the harness from the estimators."""

from typing import TYPE_CHECKING, Protocol

if TYPE_CHECKING:
    from cooploc.sensing.observation import TickObservation
    from cooploc.systems.estimate import PositionEstimate


class TickLocalizer(Protocol):
    """Anything that turns one tick of observations into position estimates."""

    name: str

    def reset(self) -> None:
        """Forget any state carried between ticks."""
        ...

    def step(self, observation: "TickObservation") -> "PositionEstimate":
        """Estimate every vehicle's position at the observed tick."""
        ...
