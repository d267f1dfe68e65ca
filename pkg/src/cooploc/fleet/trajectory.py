"""Ground-truth trajectories of a whole fleet over time."""

from dataclasses import dataclass

import numpy as np

from cooploc.errors import ConfigError
from cooploc.fleet.vehicle import VehiclePose
from cooploc.utils.angles import wrap_array_to_two_pi


@dataclass(frozen=True, eq=False)
class FleetTrajectory:
    """T×N grid of vehicle poses.

    Every state field is stored as a (T, N) float array indexed
    ``[tick, vehicle]``.
    """

    x: np.ndarray
    y: np.ndarray
    heading: np.ndarray
    speed: np.ndarray
    yaw_rate: np.ndarray
    dt: float

    def __post_init__(self):
        """Validate grid shapes."""
        shape = np.shape(self.x)
        if len(shape) != 2 or shape[0] < 1 or shape[1] < 1:
            raise ConfigError(f"Trajectory grid must be T×N with T, N ≥ 1, got {shape}")
        for name in ("y", "heading", "speed", "yaw_rate"):
            if np.shape(getattr(self, name)) != shape:
                raise ConfigError(f"Field {name} does not match grid shape {shape}")
        if not self.dt > 0:
            raise ConfigError(f"Time step must be positive, got {self.dt}")

    @property
    def n_ticks(self) -> int:
        """Number of ticks T."""
        return self.x.shape[0]

    @property
    def n_vehicles(self) -> int:
        """Number of vehicles N."""
        return self.x.shape[1]

    def pose(self, tick: int, vehicle: int) -> VehiclePose:
        """Get the pose of one vehicle at one tick."""
        return VehiclePose(
            x=float(self.x[tick, vehicle]),
            y=float(self.y[tick, vehicle]),
            heading=float(self.heading[tick, vehicle]),
            speed=float(self.speed[tick, vehicle]),
            yaw_rate=float(self.yaw_rate[tick, vehicle]),
        )

    def poses_at(self, tick: int) -> list[VehiclePose]:
        """Get all N poses at a tick."""
        return [self.pose(tick, i) for i in range(self.n_vehicles)]

    def positions(self, tick: int) -> np.ndarray:
        """Get true positions at a tick as an (N, 2) array."""
        return np.column_stack([self.x[tick], self.y[tick]])

    def window(self, end_tick: int, length: int) -> tuple[np.ndarray, np.ndarray]:
        """Get the N×τ true-coordinate matrices of ticks end−τ+1 … end.

        Args:
            end_tick: Newest tick of the window (inclusive)
            length: Window length τ

        Returns:
            Tuple of (X, Y), columns ordered oldest to newest
        """
        start = end_tick - length + 1
        if start < 0 or end_tick >= self.n_ticks:
            raise ConfigError(
                f"Window of {length} ending at tick {end_tick} is outside 0..{self.n_ticks - 1}"
            )
        return self.x[start : end_tick + 1].T.copy(), self.y[start : end_tick + 1].T.copy()

    def equals(self, other: "FleetTrajectory") -> bool:
        """Bitwise comparison of two trajectories."""
        return self.dt == other.dt and all(
            np.array_equal(getattr(self, name), getattr(other, name))
            for name in ("x", "y", "heading", "speed", "yaw_rate")
        )

    @classmethod
    def from_positions(cls, x: np.ndarray, y: np.ndarray, dt: float = 1.0) -> "FleetTrajectory":
        """Build a trajectory from positions only, estimating the kinematics.

        Heading and speed come from forward differences; yaw rate from the
        heading change. The last tick repeats the previous kinematics.

        Args:
            x: (T, N) x coordinates
            y: (T, N) y coordinates
            dt: Time step between ticks

        Returns:
            FleetTrajectory with estimated heading, speed and yaw rate
        """
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        n_ticks = x.shape[0]
        if n_ticks < 2:
            zeros = np.zeros_like(x)
            return cls(x=x, y=y, heading=zeros, speed=zeros.copy(), yaw_rate=zeros.copy(), dt=dt)

        dx = np.diff(x, axis=0)
        dy = np.diff(y, axis=0)
        heading = np.arctan2(dy, dx)
        speed = np.hypot(dx, dy) / dt
        turn = np.diff(np.unwrap(heading, axis=0), axis=0) / dt
        turn = np.vstack([turn, turn[-1:]]) if turn.size else np.zeros_like(heading)

        heading = np.vstack([heading, heading[-1:]])
        speed = np.vstack([speed, speed[-1:]])
        turn = np.vstack([turn, turn[-1:]])
        return cls(
            x=x,
            y=y,
            heading=wrap_array_to_two_pi(heading),
            speed=speed,
            yaw_rate=turn,
            dt=dt,
        )


def numerical_rank(matrix: np.ndarray, rel_tol: float = 1e-6) -> int:
    """Count singular values above rel_tol times the largest one."""
    singular_values = np.linalg.svd(np.asarray(matrix, dtype=float), compute_uv=False)
    if singular_values.size == 0 or singular_values[0] == 0.0:
        return 0
    return int(np.sum(singular_values > rel_tol * singular_values[0]))
