"""Seeded generation of platoon trajectories with the CTRV model."""

import math
from dataclasses import dataclass

import numpy as np

from cooploc.errors import ConfigError
from cooploc.fleet.trajectory import FleetTrajectory
from cooploc.fleet.vehicle import advance_ctrv
from cooploc.utils.angles import wrap_array_to_two_pi

MOTION_MODES = ("platoon", "independent")


@dataclass(frozen=True)
class FleetConfig:
    """Fleet geometry and motion ranges.

    In ``platoon`` motion every platoon draws one heading, speed and yaw rate
    shared by all its vehicles, so each platoon moves rigidly. In
    ``independent`` motion every vehicle draws its own.
    """

    n_vehicles: int = 20
    ticks: int = 500
    dt: float = 1.0
    lanes: int = 0
    spacing_min: float = 10.0
    spacing_max: float = 15.0
    speed_min: float = 8.0
    speed_max: float = 14.0
    yaw_rate_min: float = -0.05
    yaw_rate_max: float = 0.05
    heading_min: float = 0.0
    heading_max: float = 2.0 * math.pi
    motion: str = "platoon"
    platoons: int = 1
    platoon_gap: float = 200.0

    def validate(self) -> None:
        """Check every field against its documented range.

        Raises:
            ConfigError: On the first violated range
        """
        if self.n_vehicles < 1:
            raise ConfigError(f"n_vehicles must be ≥ 1, got {self.n_vehicles}")
        if self.ticks < 1:
            raise ConfigError(f"ticks must be ≥ 1, got {self.ticks}")
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ConfigError(f"dt must be positive, got {self.dt}")
        if self.lanes < 0:
            raise ConfigError(f"lanes must be ≥ 0 (0 = auto), got {self.lanes}")
        if not 1 <= self.platoons <= self.n_vehicles:
            raise ConfigError(
                f"platoons must be within 1..n_vehicles, got {self.platoons}"
            )
        if self.motion not in MOTION_MODES:
            raise ConfigError(f"motion must be one of {MOTION_MODES}, got {self.motion!r}")
        if self.speed_min < 0:
            raise ConfigError(f"speed_min must be ≥ 0, got {self.speed_min}")
        if self.spacing_min <= 0:
            raise ConfigError(f"spacing_min must be > 0, got {self.spacing_min}")
        for low, high in (
            ("spacing_min", "spacing_max"),
            ("speed_min", "speed_max"),
            ("yaw_rate_min", "yaw_rate_max"),
            ("heading_min", "heading_max"),
        ):
            low_value, high_value = getattr(self, low), getattr(self, high)
            if not (math.isfinite(low_value) and math.isfinite(high_value)):
                raise ConfigError(f"{low}/{high} must be finite")
            if low_value > high_value:
                raise ConfigError(f"{low} ({low_value}) exceeds {high} ({high_value})")


def _platoon_sizes(n_vehicles: int, platoons: int) -> list[int]:
    """Split N vehicles into contiguous, nearly equal platoons."""
    base, extra = divmod(n_vehicles, platoons)
    return [base + (1 if p < extra else 0) for p in range(platoons)]


def _grid_offsets(
    count: int, lanes: int, config: FleetConfig, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Longitudinal and lateral offsets of a convoy grid.

    Vehicles fill rows of ``lanes`` slots; each gap between consecutive rows
    and between consecutive lanes is drawn from the spacing range.
    """
    rows = math.ceil(count / lanes)
    row_gaps = rng.uniform(config.spacing_min, config.spacing_max, size=rows - 1)
    lane_gaps = rng.uniform(config.spacing_min, config.spacing_max, size=lanes - 1)
    row_offsets = np.concatenate([[0.0], np.cumsum(row_gaps)])
    lane_offsets = np.concatenate([[0.0], np.cumsum(lane_gaps)])

    slots = np.arange(count)
    return row_offsets[slots // lanes], lane_offsets[slots % lanes]


def _initial_states(config: FleetConfig, rng: np.random.Generator) -> dict[str, np.ndarray]:
    """Draw initial pose and motion parameters of every vehicle."""
    columns: dict[str, list[np.ndarray]] = {
        name: [] for name in ("x", "y", "heading", "speed", "yaw_rate")
    }

    for index, size in enumerate(_platoon_sizes(config.n_vehicles, config.platoons)):
        draws = size if config.motion == "independent" else 1
        heading = rng.uniform(config.heading_min, config.heading_max, size=draws)
        speed = rng.uniform(config.speed_min, config.speed_max, size=draws)
        yaw_rate = rng.uniform(config.yaw_rate_min, config.yaw_rate_max, size=draws)

        lanes = config.lanes or math.ceil(math.sqrt(size))
        lanes = min(lanes, size)
        along, across = _grid_offsets(size, lanes, config, rng)

        # grid axes follow the platoon heading
        axis = heading[0]
        origin_x = index * config.platoon_gap
        columns["x"].append(origin_x + along * math.cos(axis) - across * math.sin(axis))
        columns["y"].append(along * math.sin(axis) + across * math.cos(axis))
        columns["heading"].append(np.broadcast_to(heading, (size,)).copy())
        columns["speed"].append(np.broadcast_to(speed, (size,)).copy())
        columns["yaw_rate"].append(np.broadcast_to(yaw_rate, (size,)).copy())

    return {name: np.concatenate(parts) for name, parts in columns.items()}


def generate_fleet(config: FleetConfig, rng_seed: int) -> FleetTrajectory:
    """Generate ground-truth trajectories for a fleet.

    Args:
        config: Fleet geometry and motion ranges
        rng_seed: Seed; the same (config, seed) pair yields identical output

    Returns:
        FleetTrajectory with config.ticks rows of config.n_vehicles poses

    Raises:
        ConfigError: If the config is out of range (e.g. zero vehicles or ticks)
    """
    config.validate()
    rng = np.random.default_rng(rng_seed)
    state = _initial_states(config, rng)

    shape = (config.ticks, config.n_vehicles)
    x = np.empty(shape)
    y = np.empty(shape)
    heading = np.empty(shape)
    x[0], y[0] = state["x"], state["y"]
    heading[0] = wrap_array_to_two_pi(state["heading"])

    for tick in range(1, config.ticks):
        x[tick], y[tick], heading[tick] = advance_ctrv(
            x[tick - 1],
            y[tick - 1],
            heading[tick - 1],
            state["speed"],
            state["yaw_rate"],
            config.dt,
        )

    return FleetTrajectory(
        x=x,
        y=y,
        heading=heading,
        speed=np.tile(state["speed"], (config.ticks, 1)),
        yaw_rate=np.tile(state["yaw_rate"], (config.ticks, 1)),
        dt=config.dt,
    )
