"""Writing experiment results: per-method CDF CSVs and a JSON summary."""

import csv
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from cooploc import __version__
from cooploc.engine.events import EventBus, ReportWrittenEvent
from cooploc.engine.experiment import ExperimentResult
from cooploc.engine.metrics import ErrorReport, mean_and_std
from cooploc.errors import ConfigError

SUMMARY_FILE = "summary.json"
CDF_HEADER = ("squared_error_m2", "cumulative_fraction")
UNDEFINED = "undefined"


def cdf_file_name(method: str) -> str:
    """File name of a method's CDF table."""
    return f"cdf_{method}.csv"


def _method_summary(report: ErrorReport, baseline: ErrorReport) -> dict[str, Any]:
    """Summary entry of one method."""
    reduction = report.reduction_vs(baseline)
    entry: dict[str, Any] = {
        "msle_m2": report.msle,
        "n_samples": report.n_samples,
        "reduction_vs_gps_percent": UNDEFINED if reduction is None else reduction,
    }
    trial_reductions = report.trial_reductions_vs(baseline)
    if trial_reductions is None:
        entry["trial_reduction_mean_percent"] = UNDEFINED
        entry["trial_reduction_std_percent"] = UNDEFINED
    else:
        mean, std = mean_and_std(trial_reductions)
        entry["trial_reduction_mean_percent"] = mean
        entry["trial_reduction_std_percent"] = std
    return entry


def build_summary(result: ExperimentResult, generated_at: Optional[str] = None) -> dict[str, Any]:
    """JSON-ready summary: MSLE and reductions per method plus the config echo."""
    baseline = result.baseline
    return {
        "generated_at": generated_at or datetime.now(timezone.utc).isoformat(),
        "version": __version__,
        "seed": result.config.seed,
        "trials": result.config.trials,
        "trial_seeds": list(result.trial_seeds),
        "config": result.config.to_dict(),
        "methods": {
            method: _method_summary(report, baseline) for method, report in result.reports.items()
        },
    }


def write_cdf(report: ErrorReport, path: Path) -> Path:
    """Write the empirical CDF of one report as a two-column CSV."""
    values, fractions = report.cdf()
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CDF_HEADER)
        for value, fraction in zip(values.tolist(), fractions.tolist()):
            writer.writerow([repr(value), repr(fraction)])
    return path


def emit_report(
    result: ExperimentResult,
    out_dir: Path | str,
    event_bus: Optional[EventBus] = None,
    generated_at: Optional[str] = None,
) -> list[Path]:
    """Write ``cdf_<method>.csv`` for every method and ``summary.json``.

    Args:
        result: Completed experiment
        out_dir: Output directory, created if missing
        event_bus: Bus receiving one report_written event per file
        generated_at: Timestamp to record (current UTC time if omitted)

    Returns:
        Paths written, CDF tables first

    Raises:
        ConfigError: If some report holds no samples
        OSError: If a file cannot be written
    """
    empty = [method for method, report in result.reports.items() if report.is_empty]
    if empty:
        raise ConfigError(f"No error samples to report for: {', '.join(empty)}")

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    written = [
        write_cdf(report, out / cdf_file_name(method)) for method, report in result.reports.items()
    ]
    summary_path = out / SUMMARY_FILE
    with open(summary_path, "w") as handle:
        json.dump(build_summary(result, generated_at), handle, indent=2, sort_keys=True)
        handle.write("\n")
    written.append(summary_path)

    if event_bus is not None:
        for path in written:
            event_bus.emit(ReportWrittenEvent(path=str(path)))
    return written
