"""Tests for experiment configuration loading."""

import json
import math
from dataclasses import replace

import pytest

from cooploc.data.config_loader import (
    ExperimentConfig,
    load_experiment_config,
    parse_config,
)
from cooploc.errors import ConfigError
from cooploc.sensing.noise import REFERENCE_NOISE
from tests.test_helpers import make_config, write_config


def test_default_config_loads():
    """The packaged default describes the reference scenario."""
    config = load_experiment_config()
    assert config.fleet.n_vehicles == 20
    assert config.fleet.ticks == 500
    assert config.noise.sigma_x == 3.0
    assert config.noise.sigma_y == 2.5
    assert config.noise.sigma_d == 1.0
    assert config.noise.sigma_az == pytest.approx(math.radians(4.0))
    assert config.window == 10
    assert config.rank == 3
    assert config.trials == 50
    assert config.methods == ("gps", "gr-cl", "glrr-cl")


def test_missing_keys_use_defaults():
    """An empty object yields the dataclass defaults."""
    config = parse_config({})
    assert config == ExperimentConfig()
    assert config.anchors is None


def test_unknown_key_rejected():
    """Unknown keys are errors."""
    with pytest.raises(ConfigError, match="colour"):
        parse_config({"colour": "red"})


def test_trajectory_file_excludes_fleet_keys():
    """trajectory_file cannot be combined with fleet settings."""
    with pytest.raises(ConfigError):
        parse_config({"trajectory_file": "traj.csv", "n_vehicles": 5})


def test_trajectory_file_replaces_fleet():
    """A trajectory file config has no fleet."""
    config = parse_config({"trajectory_file": "traj.csv"})
    assert config.fleet is None
    assert config.trajectory_file == "traj.csv"


def test_relative_trajectory_path_resolved_against_config(tmp_path):
    """Relative trajectory paths are taken relative to the config file."""
    path = tmp_path / "exp.json"
    path.write_text(json.dumps({"trajectory_file": "traj.csv"}))
    config = load_experiment_config(path)
    assert config.trajectory_file == str(tmp_path / "traj.csv")


@pytest.mark.parametrize(
    "data",
    [
        {"trials": 0},
        {"method": "kalman"},
        {"radius": -1.0},
        {"window": 0},
        {"rank": 0},
        {"seed": -1},
        {"anchor_weight": 0.0},
        {"anchors": []},
        {"anchors": "some"},
        {"anchors": [0, "1"]},
        {"window_mode": "lazy"},
        {"window_anchors": "truth"},
        {"sigma_x": -1.0},
        {"n_vehicles": 0},
        {"n_vehicles": "ten"},
        {"max_degree": True},
    ],
)
def test_invalid_values_rejected(data):
    """Out-of-range or mistyped values raise ConfigError."""
    with pytest.raises(ConfigError):
        parse_config(data)


def test_integer_accepted_for_float_key():
    """JSON integers are fine where floats are expected."""
    assert parse_config({"radius": 25}).radius == 25.0


def test_anchor_list_parsed():
    """anchors may list vehicle ids."""
    assert parse_config({"anchors": [0, 3]}).anchors == (0, 3)


def test_invalid_json_rejected(tmp_path):
    """Malformed JSON is a config error."""
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        load_experiment_config(path)


def test_non_object_rejected():
    """The file must hold one JSON object."""
    with pytest.raises(ConfigError):
        parse_config([1, 2])


def test_missing_file_raises_os_error(tmp_path):
    """Unreadable config files surface as OSError."""
    with pytest.raises(OSError):
        load_experiment_config(tmp_path / "absent.json")


def test_overrides_replace_fields():
    """Command-line overrides replace file values, None keeps them."""
    config = make_config().with_overrides(seed=99, method="gps", trials=None)
    assert config.seed == 99
    assert config.method == "gps"
    assert config.trials == 1
    assert config.methods == ("gps",)


def test_invalid_override_rejected():
    """Overrides are validated too."""
    with pytest.raises(ConfigError):
        make_config().with_overrides(trials=0)


def test_to_dict_round_trips():
    """parse_config inverts to_dict."""
    config = make_config(anchors=[1, 2], sigma_az_deg=4.0)
    restored = parse_config(config.to_dict())
    assert restored.noise.sigma_az == pytest.approx(config.noise.sigma_az, rel=1e-15)
    assert replace(restored, noise=config.noise) == config


def test_azimuth_deviation_echoed_from_noise():
    """to_dict reports the azimuth deviation the run actually uses."""
    config = ExperimentConfig(noise=REFERENCE_NOISE)
    assert config.to_dict()["sigma_az_deg"] == pytest.approx(4.0)
    assert config.to_dict()["sigma_x"] == 3.0


def test_written_config_loads(tmp_path):
    """A config written by the helper loads back."""
    config = load_experiment_config(write_config(tmp_path, trials=3))
    assert config.trials == 3
    assert config.fleet.n_vehicles == 8
