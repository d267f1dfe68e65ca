"""Experiment configuration loaded from flat JSON files."""

import json
import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Optional

from cooploc.errors import ConfigError
from cooploc.fleet.generation import FleetConfig
from cooploc.sensing.noise import NoiseParams
from cooploc.systems.glrr_cl import WINDOW_ANCHOR_SOURCES, WINDOW_MODES

METHODS = ("gps", "gr-cl", "glrr-cl")
METHOD_CHOICES = METHODS + ("all",)

FLEET_KEYS = tuple(f.name for f in fields(FleetConfig))
NOISE_KEYS = ("sigma_x", "sigma_y", "sigma_d", "sigma_az_deg")
RUN_KEYS = (
    "trajectory_file",
    "radius",
    "max_degree",
    "method",
    "window",
    "rank",
    "trials",
    "seed",
    "anchors",
    "anchor_weight",
    "window_mode",
    "window_anchors",
)
KNOWN_KEYS = frozenset(FLEET_KEYS + NOISE_KEYS + RUN_KEYS)

DEFAULT_CONFIG_PATH = Path(__file__).parent / "default_experiment.json"


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one `cooploc run` needs.

    Exactly one of ``fleet`` and ``trajectory_file`` is set. ``anchors`` of
    None means every vehicle is an anchor.
    """

    fleet: Optional[FleetConfig] = field(default_factory=FleetConfig)
    trajectory_file: Optional[str] = None
    noise: NoiseParams = field(default_factory=NoiseParams)
    radius: float = 20.0
    max_degree: int = 6
    method: str = "all"
    window: int = 10
    rank: int = 3
    trials: int = 50
    seed: int = 0
    anchors: Optional[tuple[int, ...]] = None
    anchor_weight: float = 1.0
    window_mode: str = "rebuild"
    window_anchors: str = "gr-cl"

    def __post_init__(self):
        """Validate cross-field invariants."""
        if (self.fleet is None) == (self.trajectory_file is None):
            raise ConfigError("Exactly one of fleet settings or trajectory_file must be given")
        if self.fleet is not None:
            self.fleet.validate()
        if self.method not in METHOD_CHOICES:
            raise ConfigError(f"method must be one of {METHOD_CHOICES}, got {self.method!r}")
        if self.trials < 1:
            raise ConfigError(f"trials must be ≥ 1, got {self.trials}")
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ConfigError(f"radius must be positive, got {self.radius}")
        if self.max_degree < 1:
            raise ConfigError(f"max_degree must be ≥ 1, got {self.max_degree}")
        if self.window < 1:
            raise ConfigError(f"window must be ≥ 1, got {self.window}")
        if self.rank < 1:
            raise ConfigError(f"rank must be ≥ 1, got {self.rank}")
        if self.seed < 0:
            raise ConfigError(f"seed must be a non-negative integer, got {self.seed}")
        if not self.anchor_weight > 0:
            raise ConfigError(f"anchor_weight must be positive, got {self.anchor_weight}")
        if self.anchors is not None and not self.anchors:
            raise ConfigError("anchors must be 'all' or a non-empty list of vehicle ids")
        if self.window_mode not in WINDOW_MODES:
            raise ConfigError(f"window_mode must be one of {WINDOW_MODES}, got {self.window_mode!r}")
        if self.window_anchors not in WINDOW_ANCHOR_SOURCES:
            raise ConfigError(
                f"window_anchors must be one of {WINDOW_ANCHOR_SOURCES}, got {self.window_anchors!r}"
            )

    @property
    def methods(self) -> tuple[str, ...]:
        """Methods to report, in canonical order."""
        return METHODS if self.method == "all" else (self.method,)

    def with_overrides(self, **changes: Any) -> "ExperimentConfig":
        """Copy with some run-level fields replaced (None values are ignored)."""
        return replace(self, **{key: value for key, value in changes.items() if value is not None})

    def to_dict(self) -> dict[str, Any]:
        """Flat key/value form, the inverse of parse_config."""
        data: dict[str, Any] = {}
        if self.fleet is not None:
            for key in FLEET_KEYS:
                data[key] = getattr(self.fleet, key)
        else:
            data["trajectory_file"] = self.trajectory_file
        data.update(
            sigma_x=self.noise.sigma_x,
            sigma_y=self.noise.sigma_y,
            sigma_d=self.noise.sigma_d,
            sigma_az_deg=self.noise.sigma_az_deg,
            radius=self.radius,
            max_degree=self.max_degree,
            method=self.method,
            window=self.window,
            rank=self.rank,
            trials=self.trials,
            seed=self.seed,
            anchors="all" if self.anchors is None else list(self.anchors),
            anchor_weight=self.anchor_weight,
            window_mode=self.window_mode,
            window_anchors=self.window_anchors,
        )
        return data


def _parse_anchors(value: Any) -> Optional[tuple[int, ...]]:
    """Parse the anchors key: "all" or a list of integer ids."""
    if value == "all":
        return None
    if not isinstance(value, list) or not all(
        isinstance(item, int) and not isinstance(item, bool) for item in value
    ):
        raise ConfigError(f"anchors must be 'all' or a list of integers, got {value!r}")
    return tuple(value)


def _typed(key: str, value: Any, kind: type) -> Any:
    """Check a JSON scalar against the expected Python type."""
    if kind is float and isinstance(value, int) and not isinstance(value, bool):
        return float(value)
    if kind is int and isinstance(value, bool):
        raise ConfigError(f"{key} must be an integer, got {value!r}")
    if not isinstance(value, kind):
        raise ConfigError(f"{key} must be of type {kind.__name__}, got {value!r}")
    return value


def parse_config(data: dict[str, Any]) -> ExperimentConfig:
    """Build an ExperimentConfig from a flat key/value mapping.

    Missing keys fall back to the dataclass defaults.

    Raises:
        ConfigError: On unknown keys, wrong types or out-of-range values
    """
    if not isinstance(data, dict):
        raise ConfigError("Config file must hold a single JSON object")
    unknown = sorted(set(data) - KNOWN_KEYS)
    if unknown:
        raise ConfigError(f"Unknown config keys: {', '.join(unknown)}")

    fleet_types = {f.name: f.type for f in fields(FleetConfig)}
    fleet_values = {
        key: _typed(key, data[key], fleet_types[key]) for key in FLEET_KEYS if key in data
    }
    trajectory_file = data.get("trajectory_file")
    if trajectory_file is not None:
        if fleet_values:
            raise ConfigError(
                f"trajectory_file excludes fleet keys: {', '.join(sorted(fleet_values))}"
            )
        trajectory_file = _typed("trajectory_file", trajectory_file, str)

    noise = NoiseParams.from_degrees(
        sigma_d=_typed("sigma_d", data.get("sigma_d", 0.0), float),
        sigma_az_deg=_typed("sigma_az_deg", data.get("sigma_az_deg", 0.0), float),
        sigma_x=_typed("sigma_x", data.get("sigma_x", 0.0), float),
        sigma_y=_typed("sigma_y", data.get("sigma_y", 0.0), float),
    )

    run_types = {
        "radius": float,
        "max_degree": int,
        "method": str,
        "window": int,
        "rank": int,
        "trials": int,
        "seed": int,
        "anchor_weight": float,
        "window_mode": str,
        "window_anchors": str,
    }
    run_values = {key: _typed(key, data[key], kind) for key, kind in run_types.items() if key in data}
    if "anchors" in data:
        run_values["anchors"] = _parse_anchors(data["anchors"])

    return ExperimentConfig(
        fleet=None if trajectory_file is not None else FleetConfig(**fleet_values),
        trajectory_file=trajectory_file,
        noise=noise,
        **run_values,
    )


def load_experiment_config(file_path: Path | str | None = None) -> ExperimentConfig:
    """Load an experiment configuration from a JSON file.

    Args:
        file_path: Path to a config file. If None, uses the packaged default.

    Returns:
        Validated ExperimentConfig

    Raises:
        ConfigError: If the file is not valid JSON or fails validation
        OSError: If the file cannot be read
    """
    path = DEFAULT_CONFIG_PATH if file_path is None else Path(file_path)
    with open(path, "r") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as error:
            raise ConfigError(f"{path}: invalid JSON ({error})") from error

    config = parse_config(data)
    # relative trajectory paths are resolved against the config file
    if config.trajectory_file is not None and not Path(config.trajectory_file).is_absolute():
        config = replace(config, trajectory_file=str(path.parent / config.trajectory_file))
    return config
