# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Heatmap experiment: ambiguity surfaces of one scene and their detections."""

import logging
from pathlib import Path
from typing import Any

from ddradar.ambiguity import SearchRegion, cross_ambiguity_dd
from ddradar.config import RadarConfig, Waveform
from ddradar.estimator import to_range_velocity

from .emit import create_table_emitters, write_report
from .pipelines import make_grid, make_sounding, run_pipeline, scene_region
from .progress import Progress, ProgressReporter
from .scenes import RectangleSpec, scene_from_config

log = logging.getLogger(__name__)


def run_heatmap(
    config: RadarConfig,
    out_dir: str | Path,
    reporter: ProgressReporter,
    lattice: bool = False,
) -> dict[str, Any]:
    """Write one surface table per sounding segment plus a detection report.

    With `lattice`, a Zak-OTFS run also writes the sounding self-ambiguity over
    [-τ_p, τ_p] × [-ν_p, ν_p].
    """
    grid = make_grid(config.grid)
    scene = scene_from_config(config.scene)
    if len(scene):
        region = scene_region(scene, grid, config.detection.search_margin)
    else:
        spec = RectangleSpec(
            config.scene.rectangle_index, config.scene.rectangle_scale, config.scene.rectangle_scale
        )
        region = spec.region(
            config.detection.search_margin * grid.delay_resolution,
            config.detection.search_margin * grid.doppler_resolution,
        )
    log.info("heatmap %s over %s, %d targets", config.waveform.value, region, len(scene))

    sounding = make_sounding(config.waveform, grid, config.filter)
    report, surfaces = run_pipeline(
        sounding,
        scene,
        region,
        config.detection,
        config.filter.sparsity_threshold,
        max(len(scene), 1),
        config.monte_carlo.snr_db,
        config.monte_carlo.seed,
        snap_to_grid=config.scene.snap_to_grid,
    )
    if not report.crystallized and config.waveform == Waveform.zak_otfs:
        reporter.warning("Scene violates the crystallization condition.")

    emitters = create_table_emitters(config.reporting.emit, out_dir)
    tables = {f"surface_{i}": s.to_frame() for i, s in enumerate(surfaces)}
    if lattice and config.waveform == Waveform.zak_otfs:
        two_periods = SearchRegion(-grid.tau_p, grid.tau_p, grid.nu_p)
        x_dd = sounding.segments_dd[0]
        tables["lattice"] = cross_ambiguity_dd(
            x_dd, x_dd, two_periods, config.filter.sparsity_threshold
        ).to_frame()

    for i, (name, frame) in enumerate(tables.items()):
        for emitter in emitters:
            emitter.emit(name, frame)
        reporter(Progress(name, len(tables), i + 1))

    detections = report.to_dict()
    for record, estimate in zip(detections["estimates"], report.estimates, strict=True):
        record["range_m"], record["velocity_mps"] = to_range_velocity(
            estimate, config.grid.carrier_hz
        )
    result = {
        "command": "heatmap",
        "config": config.model_dump(mode="json"),
        "scene": scene.to_records(),
        "region": {"tau_min_s": region.tau_min, "tau_max_s": region.tau_max, "nu_max_hz": region.nu_max},
        "slopes_hz2": list(sounding.slopes),
        "detections": detections,
        "tables": sorted(tables),
    }
    write_report(out_dir, "heatmap_report", result)
    return result
