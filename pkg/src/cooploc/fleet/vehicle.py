"""Vehicle pose and the constant-turn-rate-and-velocity motion step."""

import math
from dataclasses import dataclass

import numpy as np

from cooploc.errors import ConfigError
from cooploc.utils.angles import wrap_array_to_two_pi, wrap_to_two_pi
from cooploc.utils.position import Point

# Below this yaw rate (rad/s) the turn is integrated as a chord at mid-heading.
OMEGA_EPS = 1e-6


@dataclass(frozen=True)
class VehiclePose:
    """Ground-truth state of one vehicle at one tick.

    Heading is measured counter-clockwise from the +x axis and is stored
    normalized into [0, 2π).
    """

    x: float
    y: float
    heading: float
    speed: float
    yaw_rate: float

    def __post_init__(self):
        """Validate and normalize the pose."""
        values = (self.x, self.y, self.heading, self.speed, self.yaw_rate)
        if not all(math.isfinite(v) for v in values):
            raise ConfigError(f"Pose has non-finite fields: {values}")
        if self.speed < 0:
            raise ConfigError(f"Speed must be non-negative, got {self.speed}")
        object.__setattr__(self, "heading", wrap_to_two_pi(self.heading))

    @property
    def position(self) -> Point:
        """Planar position of the vehicle."""
        return Point(self.x, self.y)


def advance_ctrv(
    x: np.ndarray,
    y: np.ndarray,
    heading: np.ndarray,
    speed: np.ndarray,
    yaw_rate: np.ndarray,
    dt: float,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Advance arrays of vehicle states by one CTRV step.

    Args:
        x: X coordinates (m)
        y: Y coordinates (m)
        heading: Headings (rad, from +x)
        speed: Speeds (m/s)
        yaw_rate: Yaw rates (rad/s)
        dt: Time step (s)

    Returns:
        Tuple of (new x, new y, new wrapped heading)
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    heading = np.asarray(heading, dtype=float)
    speed = np.asarray(speed, dtype=float)
    yaw_rate = np.asarray(yaw_rate, dtype=float)

    turn = yaw_rate * dt
    straight = np.abs(yaw_rate) < OMEGA_EPS
    safe_rate = np.where(straight, 1.0, yaw_rate)
    radius = speed / safe_rate

    arc_dx = -radius * np.sin(heading) + radius * np.sin(heading + turn)
    arc_dy = radius * np.cos(heading) - radius * np.cos(heading + turn)

    # chord along the mid-heading; exactly the straight line when ω = 0
    mid = heading + 0.5 * turn
    chord_dx = speed * dt * np.cos(mid)
    chord_dy = speed * dt * np.sin(mid)

    new_x = x + np.where(straight, chord_dx, arc_dx)
    new_y = y + np.where(straight, chord_dy, arc_dy)
    new_heading = wrap_array_to_two_pi(heading + turn)
    return new_x, new_y, new_heading


def step_ctrv(pose: VehiclePose, dt: float) -> VehiclePose:
    """Advance one vehicle pose by one time step.

    Args:
        pose: Current pose
        dt: Time step in seconds

    Returns:
        Pose after dt seconds with unchanged speed and yaw rate

    Raises:
        ConfigError: If dt is not a positive finite number
    """
    if not math.isfinite(dt) or dt <= 0:
        raise ConfigError(f"Time step must be positive and finite, got {dt}")

    new_x, new_y, new_heading = advance_ctrv(
        pose.x, pose.y, pose.heading, pose.speed, pose.yaw_rate, dt
    )
    return VehiclePose(
        x=float(new_x),
        y=float(new_y),
        heading=float(new_heading),
        speed=pose.speed,
        yaw_rate=pose.yaw_rate,
    )
