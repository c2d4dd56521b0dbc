# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Experiment runners: heatmaps, rectangle and SNR Monte Carlo sweeps, and the complexity benchmark."""

from .bench import bench_grid, fit_loglog_slope, run_complexity_bench
from .cli import experiment_cli
from .heatmap import run_heatmap
from .pipelines import Sounding, make_grid, make_sounding, receive, run_pipeline, scene_region
from .rectangles import run_rectangles
from .scenes import PRESETS, RectangleSpec, load_scene_file, preset_scene, random_scene
from .snr_sweep import run_snr_sweep

__all__ = [
    "PRESETS",
    "RectangleSpec",
    "Sounding",
    "bench_grid",
    "experiment_cli",
    "fit_loglog_slope",
    "load_scene_file",
    "make_grid",
    "make_sounding",
    "preset_scene",
    "random_scene",
    "receive",
    "run_complexity_bench",
    "run_heatmap",
    "run_pipeline",
    "run_rectangles",
    "run_snr_sweep",
    "scene_region",
]
