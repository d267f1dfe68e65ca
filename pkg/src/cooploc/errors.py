"""Exception hierarchy shared by every cooploc subsystem."""


class CooplocError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(CooplocError, ValueError):
    """Invalid configuration value or operation argument."""


class TrajectoryParseError(ConfigError):
    """Malformed trajectory CSV."""

    def __init__(self, message: str, line_number: int | None = None):
        """Initialize parse error.

        Args:
            message: Description of the problem
            line_number: 1-based line of the offending row, if known
        """
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class RankDeficiencyError(CooplocError, ArithmeticError):
    """A least-squares system has no unique solution."""


class WindowNotReady(CooplocError):
    """Not enough ticks have been collected to fill the estimation window."""

    def __init__(self, available: int, required: int):
        """Initialize warmup signal.

        Args:
            available: Ticks currently held
            required: Window length
        """
        super().__init__(f"window holds {available} of {required} ticks")
        self.available = available
        self.required = required
