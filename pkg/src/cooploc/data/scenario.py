"""Per-trial scenario construction: seeds, ground truth and measurement streams."""

import numpy as np

from cooploc.data.config_loader import ExperimentConfig
from cooploc.data.trajectory_io import load_trajectories
from cooploc.fleet.generation import generate_fleet
from cooploc.fleet.trajectory import FleetTrajectory


def trial_seed(seed: int, trial: int) -> int:
    """Seed of Monte-Carlo trial t: seed XOR t."""
    return seed ^ trial


def measurement_rng(seed: int) -> np.random.Generator:
    """Noise stream of a trial, independent of the fleet stream of the same seed."""
    return np.random.default_rng([seed, 1])


def build_trajectory(config: ExperimentConfig, seed: int) -> FleetTrajectory:
    """Ground truth of one trial.

    Simulated fleets are regenerated from the trial seed; a trajectory file is
    loaded as is and shared by every trial.

    Raises:
        ConfigError: If the fleet settings are invalid
        TrajectoryParseError: If the trajectory file is malformed
        OSError: If the trajectory file cannot be read
    """
    if config.trajectory_file is not None:
        return load_trajectories(config.trajectory_file)
    return generate_fleet(config.fleet, seed)
