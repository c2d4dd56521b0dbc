# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Monte Carlo trials shared by the rectangle and SNR-sweep experiments."""

import logging
from collections.abc import Callable
from typing import Any

import numpy as np
import pandas as pd

from ddradar.ambiguity import SearchRegion
from ddradar.config import RadarConfig
from ddradar.estimator import region_miss_penalty, rms_error
from ddradar.model import RadarScene

from .pipelines import Sounding, run_pipeline

log = logging.getLogger(__name__)

SceneDraw = Callable[[int], RadarScene]


def run_trials(
    config: RadarConfig,
    soundings: list[Sounding],
    region: SearchRegion,
    draw: SceneDraw,
    snr_db: float | None,
    noise_stream: int = 0,
    on_trial: Callable[[int], None] | None = None,
) -> list[dict[str, Any]]:
    """Score every sounding on `trials` scenes; one row per (trial, waveform).

    Trial t uses the scene draw(t) for every sounding, so waveforms are compared
    on identical scenes.
    """
    rows = []
    carrier = config.grid.carrier_hz
    penalty = region_miss_penalty(region, carrier)
    for trial in range(config.monte_carlo.trials):
        scene = draw(trial)
        for sounding in soundings:
            report, _ = run_pipeline(
                sounding,
                scene,
                region,
                config.detection,
                config.filter.sparsity_threshold,
                len(scene),
                snr_db,
                config.monte_carlo.seed,
                trial,
                config.scene.snap_to_grid,
                noise_stream,
            )
            score = rms_error(
                report.estimates,
                scene,
                carrier,
                bandwidth=sounding.grid.bandwidth,
                duration=sounding.grid.duration,
                miss_penalty=penalty,
            )
            rows.append({
                "trial": trial,
                "waveform": sounding.waveform.value,
                "range_rmse_m": score.range_rmse,
                "velocity_rmse_mps": score.velocity_rmse,
                "missed": score.missed,
                "flagged": score.flagged,
                "ghosts_rejected": report.ghosts_rejected,
            })
        if on_trial is not None:
            on_trial(trial)
    return rows


def summarize(trials: pd.DataFrame, keys: list[str]) -> pd.DataFrame:
    """Mean RMS errors and their standard errors per group."""
    grouped = trials.groupby(keys, sort=False)
    summary = grouped.agg(
        trials=("trial", "count"),
        range_rmse_m=("range_rmse_m", "mean"),
        range_rmse_se=("range_rmse_m", _standard_error),
        velocity_rmse_mps=("velocity_rmse_mps", "mean"),
        velocity_rmse_se=("velocity_rmse_mps", _standard_error),
        missed=("missed", "sum"),
        flagged=("flagged", "sum"),
    )
    return summary.reset_index()


def _standard_error(values: pd.Series) -> float:
    if values.size < 2:
        return 0.0
    return float(np.std(values.to_numpy(), ddof=1) / np.sqrt(values.size))
