"""Base command interface for CLI actions."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

from cooploc.errors import ConfigError, RankDeficiencyError

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_NUMERICAL_ERROR = 2
EXIT_IO_ERROR = 3


@dataclass
class CommandResult:
    """Result of executing a command."""

    success: bool
    exit_code: int = EXIT_OK
    message: str = ""
    data: Any = None


def exit_code_for(error: Exception) -> int:
    """Map a failure to its process exit code.

    Raises:
        TypeError: If the error is not one the CLI reports
    """
    if isinstance(error, ConfigError):
        return EXIT_CONFIG_ERROR
    if isinstance(error, RankDeficiencyError):
        return EXIT_NUMERICAL_ERROR
    if isinstance(error, OSError):
        return EXIT_IO_ERROR
    raise TypeError(f"Unhandled error type {type(error).__name__}")


class Command(ABC):
    """Base class for all commands."""

    @abstractmethod
    def run(self) -> CommandResult:
        """Do the work; may raise toolkit errors or OSError."""

    def execute(self) -> CommandResult:
        """Run the command, turning known failures into a failed result.

        Returns:
            Result with the exit code the process should end with
        """
        try:
            return self.run()
        except (ConfigError, RankDeficiencyError, OSError) as error:
            return CommandResult(success=False, exit_code=exit_code_for(error), message=str(error))
