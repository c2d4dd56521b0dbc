# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""SNR sweep: RMS errors versus receiver SNR on a fixed target rectangle."""

import logging
import math
from pathlib import Path

import pandas as pd

from ddradar.ambiguity import SearchRegion
from ddradar.channel import make_rng
from ddradar.config import RadarConfig
from ddradar.model import RadarScene

from .emit import create_table_emitters, write_report
from .monte_carlo import run_trials, summarize
from .pipelines import make_grid, make_sounding
from .progress import Progress, ProgressReporter
from .scenes import random_scene

log = logging.getLogger(__name__)

SCENE_STREAM = 0


def run_snr_sweep(
    config: RadarConfig,
    out_dir: str | Path,
    reporter: ProgressReporter,
    snr_list: list[float] | None = None,
) -> pd.DataFrame:
    """Monte Carlo RMS errors per SNR point and waveform.

    Scenes are drawn in [0, τ_max] × [-ν_max, ν_max], both scaled by the
    rectangle scale, and reused at every SNR point. An infinite SNR point
    runs noise-free.
    """
    grid = make_grid(config.grid)
    soundings = [make_sounding(w, grid, config.filter) for w in config.waveforms]
    mc = config.monte_carlo
    scale = config.scene.rectangle_scale
    tau_max, nu_max = mc.sweep_tau_max_s * scale, mc.sweep_nu_max_hz * scale
    margin = config.detection.search_margin
    region = SearchRegion(
        0.0, tau_max + margin * grid.delay_resolution, nu_max + margin * grid.doppler_resolution
    )
    snr_list = mc.snr_list_db if snr_list is None else snr_list

    def draw(trial: int) -> RadarScene:
        return random_scene(
            tau_max,
            nu_max,
            config.scene.target_count,
            make_rng(mc.seed, trial, SCENE_STREAM),
            config.scene.gain_law,
            config.scene.gain_scale,
        )

    progress = reporter.child("snr-sweep")
    total = len(snr_list) * mc.trials
    rows = []
    for point, snr_db in enumerate(snr_list):
        log.info("SNR point %g dB", snr_db)

        def tick(trial: int, point: int = point) -> None:
            progress(Progress(f"{snr_list[point]:g} dB", total, point * mc.trials + trial + 1))

        snr = None if math.isinf(snr_db) else snr_db
        for row in run_trials(
            config, soundings, region, draw, snr, noise_stream=point + 1, on_trial=tick
        ):
            rows.append({"snr_db": snr_db, **row})

    per_trial = pd.DataFrame(rows)
    summary = summarize(per_trial, ["snr_db", "waveform"])
    for emitter in create_table_emitters(config.reporting.emit, out_dir):
        emitter.emit("snr_sweep_trials", per_trial)
        emitter.emit("snr_sweep", summary)
    write_report(
        out_dir,
        "snr_sweep_report",
        {
            "command": "snr-sweep",
            "config": config.model_dump(mode="json"),
            "summary": summary.to_dict(orient="records"),
        },
    )
    return summary
