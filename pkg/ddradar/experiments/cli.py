# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Main definition."""

import logging
import time
import warnings
from pathlib import Path
from typing import cast

from pydantic import ValidationError

from ddradar.config import (
    ConfigurationError,
    RadarConfig,
    RadarConfigInput,
    ReporterType,
    create_radar_config,
    load_config_file,
)
from ddradar.errors import NumericalError

from .bench import run_complexity_bench
from .heatmap import run_heatmap
from .progress import NullProgressReporter, PrintProgressReporter, ProgressReporter
from .progress.rich import RichProgressReporter
from .rectangles import run_rectangles
from .snr_sweep import run_snr_sweep

# Ignore warnings from numba
warnings.filterwarnings("ignore", message=".*NumbaDeprecationWarning.*")

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

COMMANDS = ("heatmap", "rectangles", "snr-sweep", "bench")


def experiment_cli(
    command: str,
    config: str | None,
    out: str | None,
    seed: int | None,
    profile: str | None,
    reporter: str | None,
    verbose: bool,
    lattice: bool = False,
    root: str = ".",
) -> int:
    """Run one experiment and return the process exit code."""
    run_id = time.strftime("%Y%m%d-%H%M%S")
    progress_reporter: ProgressReporter = NullProgressReporter()
    try:
        settings = _read_config(config, root, seed, profile, reporter)
        out_dir = Path(out or settings.reporting.output_dir) / run_id
        _enable_logging(out_dir, verbose)
        log.info("using configuration: %s", settings)
        progress_reporter = _get_progress_reporter(settings.reporting.reporter)
        artifacts = out_dir / "artifacts"
        match command:
            case "heatmap":
                run_heatmap(settings, artifacts, progress_reporter, lattice)
            case "rectangles":
                run_rectangles(settings, artifacts, progress_reporter)
            case "snr-sweep":
                run_snr_sweep(settings, artifacts, progress_reporter)
            case "bench":
                run_complexity_bench(settings, artifacts, progress_reporter)
            case _:
                msg = f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}"
                raise ConfigurationError(msg)
    except (ConfigurationError, ValidationError) as e:
        log.exception("configuration error")
        progress_reporter.stop()
        progress_reporter.error(str(e))
        _print_error(progress_reporter, e)
        return EXIT_CONFIG
    except NumericalError as e:
        log.exception("numerical failure")
        progress_reporter.stop()
        progress_reporter.error(str(e))
        _print_error(progress_reporter, e)
        return EXIT_NUMERICAL
    progress_reporter.stop()
    progress_reporter.success(f"{command} completed, outputs in {out_dir}")
    return EXIT_OK


def _print_error(reporter: ProgressReporter, e: Exception) -> None:
    # the null reporter swallows messages; errors still reach the terminal
    if isinstance(reporter, NullProgressReporter):
        print(f"error: {e}")  # noqa T201


def _read_config(
    config: str | None,
    root: str,
    seed: int | None,
    profile: str | None,
    reporter: str | None,
) -> RadarConfig:
    """Load the config file, apply command-line overrides and resolve defaults."""
    values = cast(dict, load_config_file(config) if config else {})
    if seed is not None:
        values.setdefault("monte_carlo", {})["seed"] = seed
    if reporter is not None:
        values.setdefault("reporting", {})["reporter"] = reporter
    try:
        return create_radar_config(cast(RadarConfigInput, values), root, profile)
    except (ConfigurationError, ValidationError):
        raise
    except ValueError as e:
        # enum conversions of unknown names
        raise ConfigurationError(str(e)) from e


def _get_progress_reporter(reporter_type: ReporterType) -> ProgressReporter:
    match reporter_type:
        case ReporterType.rich:
            return RichProgressReporter("ddradar ")
        case ReporterType.print:
            return PrintProgressReporter("ddradar ")
        case ReporterType.none:
            return NullProgressReporter()
        case _:
            msg = f"Invalid progress reporter type: {reporter_type}"
            raise ConfigurationError(msg)


def _enable_logging(out_dir: Path, verbose: bool) -> None:
    logging_file = out_dir / "reports" / "ddradar.log"
    logging_file.parent.mkdir(parents=True, exist_ok=True)

    logging_file.touch(exist_ok=True)

    logging.basicConfig(
        filename=str(logging_file),
        filemode="a",
        format="%(asctime)s,%(msecs)d %(name)s %(levelname)s %(message)s",
        datefmt="%H:%M:%S",
        level=logging.DEBUG if verbose else logging.INFO,
    )
