"""Commands for running experiments and generating trajectory files."""

from pathlib import Path
from typing import Optional, TextIO

from cooploc import __version__
from cooploc.commands.command import Command, CommandResult
from cooploc.data.config_loader import load_experiment_config
from cooploc.data.scenario import build_trajectory
from cooploc.data.trajectory_io import write_trajectories
from cooploc.engine.experiment import ExperimentEngine
from cooploc.errors import ConfigError
from cooploc.reporting.report_writer import emit_report


class RunExperimentCommand(Command):
    """Run the Monte-Carlo experiment of a config file and write its report."""

    def __init__(
        self,
        config_path: Path | str,
        out_dir: Path | str = "results",
        seed: Optional[int] = None,
        method: Optional[str] = None,
        trials: Optional[int] = None,
        log_stream: Optional[TextIO] = None,
    ):
        """Initialize run command.

        Args:
            config_path: Experiment config file
            out_dir: Directory receiving summary.json and the CDF tables
            seed: Overrides the config seed
            method: Overrides the config method
            trials: Overrides the config trial count
            log_stream: Stream receiving the progress log (None = silent)
        """
        self.config_path = config_path
        self.out_dir = Path(out_dir)
        self.seed = seed
        self.method = method
        self.trials = trials
        self.log_stream = log_stream

    def run(self) -> CommandResult:
        """Load, run, report."""
        config = load_experiment_config(self.config_path).with_overrides(
            seed=self.seed, method=self.method, trials=self.trials
        )
        engine = ExperimentEngine(config)
        try:
            result = engine.run()
            written = emit_report(result, self.out_dir, engine.event_bus)
        finally:
            if self.log_stream is not None:
                engine.message_log.write_to(self.log_stream)

        lines = [f"{method}: MSLE {report.msle:.4f} m²" for method, report in result.reports.items()]
        return CommandResult(success=True, message="\n".join(lines), data=written)


class GenerateTrajectoriesCommand(Command):
    """Write the simulated fleet of a config file as a trajectory CSV."""

    def __init__(self, config_path: Path | str, out_path: Path | str, seed: Optional[int] = None):
        """Initialize generate command.

        Args:
            config_path: Experiment config file holding fleet settings
            out_path: CSV file to write
            seed: Overrides the config seed
        """
        self.config_path = config_path
        self.out_path = Path(out_path)
        self.seed = seed

    def run(self) -> CommandResult:
        """Generate the fleet of the seed and save it."""
        config = load_experiment_config(self.config_path).with_overrides(seed=self.seed)
        if config.fleet is None:
            raise ConfigError("gen needs fleet settings, not a trajectory_file")
        trajectory = build_trajectory(config, config.seed)
        path = write_trajectories(trajectory, self.out_path)
        return CommandResult(
            success=True,
            message=f"wrote {trajectory.n_ticks} ticks of {trajectory.n_vehicles} vehicles to {path}",
            data=path,
        )


class VersionCommand(Command):
    """Report the toolkit version."""

    def run(self) -> CommandResult:
        return CommandResult(success=True, message=f"cooploc {__version__}", data=__version__)
