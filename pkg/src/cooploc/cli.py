"""Command-line interface: ``cooploc run``, ``cooploc gen`` and ``cooploc version``."""

import argparse
import sys
from typing import NoReturn, Optional, Sequence

from cooploc.commands.command import EXIT_CONFIG_ERROR, Command
from cooploc.commands.experiment_commands import (
    GenerateTrajectoriesCommand,
    RunExperimentCommand,
    VersionCommand,
)
from cooploc.data.config_loader import METHOD_CHOICES


def _seed(text: str) -> int:
    """Parse an unsigned 64-bit seed."""
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


class CooplocArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with code 1, like config errors.

    Exit code 2 is reserved for rank-deficient systems.
    """

    def error(self, message: str) -> NoReturn:
        """Print usage and the error, then exit with the config error code."""
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per action."""
    parser = CooplocArgumentParser(
        prog="cooploc", description="Cooperative localization experiments for vehicle fleets."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    run = subparsers.add_parser("run", help="run a Monte-Carlo experiment")
    run.add_argument("--config", required=True, help="experiment config (JSON)")
    run.add_argument("--seed", type=_seed, default=None, help="override the config seed")
    run.add_argument("--out", default="results", help="output directory (default: results)")
    run.add_argument("--method", choices=METHOD_CHOICES, default=None, help="override the method")
    run.add_argument("--trials", type=_positive, default=None, help="override the trial count")
    run.add_argument("--verbose", action="store_true", help="print the progress log to stderr")

    gen = subparsers.add_parser("gen", help="write a simulated fleet as trajectory CSV")
    gen.add_argument("--config", required=True, help="experiment config with fleet settings")
    gen.add_argument("--out", required=True, help="trajectory CSV to write")
    gen.add_argument("--seed", type=_seed, default=None, help="override the config seed")

    subparsers.add_parser("version", help="print the version")
    return parser


def make_command(args: argparse.Namespace) -> Command:
    """Turn parsed arguments into a command."""
    if args.command == "run":
        return RunExperimentCommand(
            config_path=args.config,
            out_dir=args.out,
            seed=args.seed,
            method=args.method,
            trials=args.trials,
            log_stream=sys.stderr if args.verbose else None,
        )
    if args.command == "gen":
        return GenerateTrajectoriesCommand(args.config, args.out, seed=args.seed)
    return VersionCommand()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    result = make_command(args).execute()
    if result.success:
        if result.message:
            print(result.message)
    else:
        print(f"cooploc {args.command}: {result.message}", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
