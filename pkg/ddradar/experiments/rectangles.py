# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Rectangle experiment: RMS errors as the target rectangle shrinks from the largest to the smallest."""

import logging
from pathlib import Path
from typing import Any

import pandas as pd

from ddradar.channel import make_rng
from ddradar.config import RadarConfig
from ddradar.model import RadarScene

from .emit import create_table_emitters, write_report
from .monte_carlo import run_trials, summarize
from .pipelines import make_grid, make_sounding
from .progress import Progress, ProgressReporter
from .scenes import RectangleSpec, random_scene

log = logging.getLogger(__name__)

RECTANGLES = range(1, 7)


def run_rectangles(
    config: RadarConfig, out_dir: str | Path, reporter: ProgressReporter
) -> pd.DataFrame:
    """Monte Carlo RMS range and velocity errors per rectangle and waveform."""
    grid = make_grid(config.grid)
    soundings = [make_sounding(w, grid, config.filter) for w in config.waveforms]
    scale = config.scene.rectangle_scale
    margin = config.detection.search_margin
    trials = config.monte_carlo.trials
    progress = reporter.child("rectangles")
    rows: list[dict[str, Any]] = []
    for index in RECTANGLES:
        spec = RectangleSpec(index, scale, scale)
        region = spec.region(margin * grid.delay_resolution, margin * grid.doppler_resolution)
        log.info("rectangle %d: τ ≤ %g s, |ν| ≤ %g Hz", index, spec.tau_max, spec.nu_max)

        def draw(trial: int, spec: RectangleSpec = spec) -> RadarScene:
            return random_scene(
                spec.tau_max,
                spec.nu_max,
                config.scene.target_count,
                make_rng(config.monte_carlo.seed, trial, spec.index),
                config.scene.gain_law,
                config.scene.gain_scale,
            )

        def tick(trial: int, index: int = index) -> None:
            done = (index - 1) * trials + trial + 1
            progress(Progress(f"rectangle {index}", len(RECTANGLES) * trials, done))

        for row in run_trials(
            config, soundings, region, draw, config.monte_carlo.snr_db, on_trial=tick
        ):
            rows.append({"rectangle": index, **row})

    per_trial = pd.DataFrame(rows)
    summary = summarize(per_trial, ["rectangle", "waveform"])
    for emitter in create_table_emitters(config.reporting.emit, out_dir):
        emitter.emit("rectangles_trials", per_trial)
        emitter.emit("rectangles", summary)
    write_report(
        out_dir,
        "rectangles_report",
        {
            "command": "rectangles",
            "config": config.model_dump(mode="json"),
            "summary": summary.to_dict(orient="records"),
        },
    )
    return summary
