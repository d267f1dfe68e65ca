"""Localization error statistics: MSLE, empirical CDF and reduction vs GPS."""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from cooploc.errors import ConfigError


def empirical_cdf(samples: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sorted samples and their cumulative fractions i/n.

    Raises:
        ConfigError: If there are no samples
    """
    values = np.sort(np.asarray(samples, dtype=float).ravel())
    if values.size == 0:
        raise ConfigError("Cannot build a CDF from zero samples")
    fractions = np.arange(1, values.size + 1) / values.size
    return values, fractions


def reduction_percent(msle: float, msle_gps: float) -> Optional[float]:
    """100·(1 − MSLE/MSLE_gps).

    None when the GPS error is zero or either MSLE is NaN (a trial whose
    ticks were all warmup has no samples).
    """
    if msle_gps == 0.0 or math.isnan(msle) or math.isnan(msle_gps):
        return None
    return 100.0 * (1.0 - msle / msle_gps)


@dataclass(frozen=True, eq=False)
class ErrorReport:
    """Squared position errors of one method pooled over all trials.

    Attributes:
        method: Method name ("gps", "gr-cl" or "glrr-cl")
        squared_errors: One entry per evaluated (trial, tick, vehicle) sample
        trial_msle: MSLE of each trial, in trial order
    """

    method: str
    squared_errors: np.ndarray
    trial_msle: tuple[float, ...] = field(default_factory=tuple)

    @property
    def n_samples(self) -> int:
        """Number of pooled samples."""
        return int(self.squared_errors.size)

    @property
    def is_empty(self) -> bool:
        """True when no sample was evaluated."""
        return self.n_samples == 0

    @property
    def msle(self) -> float:
        """Mean square localization error in m² (NaN when empty)."""
        if self.is_empty:
            return float("nan")
        return float(np.mean(self.squared_errors))

    def cdf(self) -> tuple[np.ndarray, np.ndarray]:
        """Empirical CDF over the pooled samples."""
        return empirical_cdf(self.squared_errors)

    def reduction_vs(self, baseline: "ErrorReport") -> Optional[float]:
        """Pooled MSLE reduction against a baseline report, in percent."""
        return reduction_percent(self.msle, baseline.msle)

    def trial_reductions_vs(self, baseline: "ErrorReport") -> Optional[list[float]]:
        """Per-trial reductions of paired trials.

        None if any trial has no samples or a zero-error baseline.
        """
        if len(self.trial_msle) != len(baseline.trial_msle):
            raise ConfigError(
                f"{self.method} and {baseline.method} reports hold different trial counts"
            )
        reductions = [
            reduction_percent(msle, gps) for msle, gps in zip(self.trial_msle, baseline.trial_msle)
        ]
        if any(value is None for value in reductions):
            return None
        return reductions


class ErrorAccumulator:
    """Collects squared errors of one method trial by trial."""

    def __init__(self, method: str):
        """Initialize accumulator.

        Args:
            method: Method the errors belong to
        """
        self.method = method
        self._trials: list[list[np.ndarray]] = []

    def start_trial(self) -> None:
        """Open a new trial."""
        self._trials.append([])

    def add(self, squared_errors: np.ndarray) -> None:
        """Record the per-vehicle squared errors of one tick."""
        if not self._trials:
            self.start_trial()
        self._trials[-1].append(np.asarray(squared_errors, dtype=float).ravel())

    def trial_msle(self, trial: int = -1) -> float:
        """MSLE of one trial (NaN if it has no samples)."""
        chunks = self._trials[trial]
        if not chunks:
            return float("nan")
        return float(np.mean(np.concatenate(chunks)))

    def build(self) -> ErrorReport:
        """Freeze everything collected into a report."""
        chunks = [chunk for trial in self._trials for chunk in trial]
        samples = np.concatenate(chunks) if chunks else np.empty(0)
        return ErrorReport(
            method=self.method,
            squared_errors=samples,
            trial_msle=tuple(self.trial_msle(t) for t in range(len(self._trials))),
        )


def mean_and_std(values: Sequence[float]) -> tuple[float, float]:
    """Mean and population standard deviation."""
    array = np.asarray(values, dtype=float)
    return float(np.mean(array)), float(np.std(array))
