"""Full-size Monte-Carlo runs of the reference scenario.

These take minutes; run them with ``pytest -m slow``.
"""

import pytest

from cooploc.data.config_loader import load_experiment_config, parse_config
from cooploc.engine.experiment import run_experiment
from cooploc.engine.metrics import mean_and_std

pytestmark = pytest.mark.slow


def _reference(**overrides):
    """Packaged default config (N=20, T=500, 50 trials) with some keys replaced."""
    return parse_config({**load_experiment_config().to_dict(), **overrides})


def _mean_reductions(config) -> dict[str, float]:
    """Mean per-trial MSLE reduction vs GPS for every localizing method."""
    result = run_experiment(config)
    reductions = {}
    for method, report in result.reports.items():
        if method == "gps":
            continue
        trial_reductions = report.trial_reductions_vs(result.baseline)
        assert trial_reductions is not None
        reductions[method] = mean_and_std(trial_reductions)[0]
    return reductions


def test_gr_cl_reduction_on_reference_fleet():
    """GR-CL removes most of the GPS error on the 20-vehicle fleet."""
    reductions = _mean_reductions(_reference(method="gr-cl"))
    assert 80.0 <= reductions["gr-cl"] <= 93.0


def test_glrr_cl_beats_gr_cl_on_larger_fleet():
    """With 25 vehicles the low-rank window adds at least two points."""
    reductions = _mean_reductions(_reference(n_vehicles=25, rank=3, window=10))
    assert 88.0 <= reductions["glrr-cl"] <= 97.0
    assert reductions["glrr-cl"] - reductions["gr-cl"] >= 2.0


def test_small_fleet_gains_nothing_from_low_rank():
    """With 5 vehicles both estimators reduce the error about equally."""
    reductions = _mean_reductions(_reference(n_vehicles=5, rank=3))
    assert abs(reductions["glrr-cl"] - reductions["gr-cl"]) <= 3.0


def test_reduction_falls_as_rank_bound_grows():
    """Looser rank bounds filter less noise."""
    by_rank = {
        rank: _mean_reductions(_reference(rank=rank, window=10))["glrr-cl"] for rank in (3, 5, 8)
    }
    assert by_rank[3] >= by_rank[5] - 1.0
    assert by_rank[5] >= by_rank[8] - 1.0
