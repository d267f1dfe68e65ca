"""Tests for error statistics."""

import math

import numpy as np
import pytest

from cooploc.engine.metrics import (
    ErrorAccumulator,
    ErrorReport,
    empirical_cdf,
    mean_and_std,
    reduction_percent,
)
from cooploc.errors import ConfigError


def test_two_sample_cdf():
    """Errors 1 and 4 give CDF points (1, 0.5) and (4, 1.0)."""
    values, fractions = empirical_cdf(np.array([4.0, 1.0]))
    np.testing.assert_array_equal(values, [1.0, 4.0])
    np.testing.assert_array_equal(fractions, [0.5, 1.0])


def test_cdf_is_monotone_and_ends_at_one():
    """The CDF is non-decreasing, preserves the count and ends at 1."""
    samples = np.random.default_rng(0).exponential(size=1000)
    values, fractions = empirical_cdf(samples)
    assert values.size == 1000
    assert np.all(np.diff(values) >= 0)
    assert np.all(np.diff(fractions) > 0)
    assert fractions[-1] == 1.0


def test_empty_cdf_rejected():
    """No samples, no CDF."""
    with pytest.raises(ConfigError):
        empirical_cdf(np.empty(0))


def test_reduction_against_gps():
    """MSLE 1.0 against 15.25 is a 93.4% reduction."""
    assert reduction_percent(1.0, 15.25) == pytest.approx(93.4426, abs=1e-4)


def test_reduction_undefined_for_zero_gps_error():
    """A zero GPS error leaves the reduction undefined."""
    assert reduction_percent(0.0, 0.0) is None


def test_report_msle():
    """MSLE is the mean squared error."""
    report = ErrorReport("gr-cl", np.array([1.0, 2.0, 3.0]))
    assert report.msle == 2.0
    assert report.n_samples == 3


def test_empty_report_has_nan_msle():
    """An empty report has no defined MSLE."""
    report = ErrorReport("gps", np.empty(0))
    assert report.is_empty
    assert math.isnan(report.msle)


def test_accumulator_tracks_trials():
    """Per-trial MSLE and pooled samples are kept."""
    accumulator = ErrorAccumulator("gps")
    accumulator.start_trial()
    accumulator.add(np.array([1.0, 3.0]))
    accumulator.start_trial()
    accumulator.add(np.array([4.0]))
    accumulator.add(np.array([6.0]))
    report = accumulator.build()
    assert report.trial_msle == (2.0, 5.0)
    assert report.msle == pytest.approx(3.5)
    assert report.n_samples == 4


def test_trial_reductions_are_paired():
    """Per-trial reductions compare matching trials."""
    gps = ErrorReport("gps", np.array([10.0, 20.0]), trial_msle=(10.0, 20.0))
    method = ErrorReport("gr-cl", np.array([1.0, 4.0]), trial_msle=(1.0, 4.0))
    assert method.trial_reductions_vs(gps) == pytest.approx([90.0, 80.0])
    assert method.reduction_vs(gps) == pytest.approx(100.0 * (1 - 2.5 / 15.0))


def test_trial_reductions_undefined_with_zero_baseline():
    """A zero-error baseline trial makes per-trial reductions undefined."""
    gps = ErrorReport("gps", np.zeros(2), trial_msle=(0.0, 0.0))
    method = ErrorReport("gr-cl", np.zeros(2), trial_msle=(0.0, 0.0))
    assert method.trial_reductions_vs(gps) is None


def test_reduction_undefined_without_samples():
    """A NaN MSLE from a sample-less trial gives no reduction."""
    assert reduction_percent(math.nan, 15.0) is None
    assert reduction_percent(1.0, math.nan) is None


def test_trial_reductions_undefined_for_all_warmup_trial():
    """A trial that was warmup throughout makes per-trial reductions undefined."""
    accumulators = {method: ErrorAccumulator(method) for method in ("gps", "glrr-cl")}
    for accumulator in accumulators.values():
        accumulator.start_trial()
        accumulator.add(np.array([4.0]))
        accumulator.start_trial()
    gps, method = (accumulator.build() for accumulator in accumulators.values())
    assert math.isnan(method.trial_msle[1])
    assert method.trial_reductions_vs(gps) is None
    assert method.reduction_vs(gps) == 0.0


def test_trial_count_mismatch_rejected():
    """Paired reductions need the same number of trials."""
    gps = ErrorReport("gps", np.ones(2), trial_msle=(1.0, 1.0))
    method = ErrorReport("gr-cl", np.ones(1), trial_msle=(1.0,))
    with pytest.raises(ConfigError):
        method.trial_reductions_vs(gps)


def test_mean_and_std():
    """Population mean and standard deviation."""
    assert mean_and_std([80.0, 90.0]) == (85.0, 5.0)
