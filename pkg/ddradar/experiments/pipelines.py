# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""The detection pipeline shared by every experiment: sounding, channel, ambiguity, estimation."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ddradar.ambiguity import AmbiguitySurface, SearchRegion, cross_ambiguity_dd
from ddradar.channel import add_awgn, apply_scene, crystallization_check
from ddradar.config import ConfigurationError, DetectionConfig, FilterConfig, Waveform
from ddradar.config.models import GridConfig
from ddradar.dd_core import DDGrid, DDSignal, TimeSignal, zak_transform
from ddradar.estimator import chirp_intersections, detect_peaks, ghost_removal
from ddradar.model import DetectionReport, RadarScene, TargetEstimate
from ddradar.waveforms import (
    GaussianFilterParams,
    PulsoneParams,
    chirp_schedule,
    make_pulsone,
    synthesize_schedule,
)

log = logging.getLogger(__name__)


def make_grid(config: GridConfig) -> DDGrid:
    """Build the sampling grid of a grid configuration."""
    return DDGrid(
        tau_p=config.delay_period_s,
        bandwidth=config.bandwidth_hz,
        duration=config.duration_s,
        P=config.delay_oversampling,
        Q=config.doppler_oversampling,
    )


@dataclass(frozen=True)
class Sounding:
    """A transmitted waveform split into the segments matched-filtered separately."""

    waveform: Waveform
    """The waveform family."""

    grid: DDGrid
    """The sampling grid."""

    segments: tuple[TimeSignal, ...]
    """One signal per segment; a single pulsone for Zak-OTFS."""

    segments_dd: tuple[DDSignal, ...]
    """The Zak transform of every segment."""

    slopes: tuple[float, ...] = ()
    """Chirp slopes per segment; empty for Zak-OTFS."""

    segment_duration: float = 0.0
    """Duration of one segment in seconds."""

    @property
    def energy(self) -> float:
        """Total transmitted energy."""
        return sum(s.energy for s in self.segments)


def make_sounding(waveform: Waveform, grid: DDGrid, filter_config: FilterConfig) -> Sounding:
    """Synthesize the sounding of a waveform family with unit total energy."""
    params = GaussianFilterParams.for_grid(grid, filter_config.alpha, filter_config.beta)
    match waveform:
        case Waveform.zak_otfs:
            x_dd, x = make_pulsone(PulsoneParams(0.0, 0.0, params), grid, filter_config.truncation)
            return Sounding(waveform, grid, (x,), (x_dd,), (), grid.duration)
        case Waveform.chirp_single_pair | Waveform.chirp_two_pairs:
            schedule = chirp_schedule(waveform, grid)
            segments = synthesize_schedule(schedule, params, grid, filter_config.truncation)
            return Sounding(
                waveform,
                grid,
                tuple(segments),
                tuple(zak_transform(s, grid) for s in segments),
                tuple(schedule.slopes),
                schedule.segments[0].duration,
            )
        case _:
            msg = f"unsupported waveform: {waveform}"
            raise ConfigurationError(msg)


def receive(
    sounding: Sounding,
    scene: RadarScene,
    snr_db: float | None,
    seed: int,
    trial: int | None = None,
    snap_to_grid: bool = True,
    noise_stream: int = 0,
) -> list[TimeSignal]:
    """Pass every segment through the scene and add receiver noise.

    The noise variance follows the SNR of the whole received sounding; each
    segment draws from its own stream.
    """
    grid = sounding.grid
    echoes = [apply_scene(scene, x, grid, snap_to_grid) for x in sounding.segments]
    if snr_db is None or not echoes:
        return echoes
    total = echoes[0]
    for echo in echoes[1:]:
        total = total + echo
    return [
        add_awgn(
            y,
            snr_db,
            seed,
            trial,
            grid,
            stream=noise_stream * len(echoes) + i,
            reference=total,
        )
        for i, y in enumerate(echoes)
    ]


def segment_surfaces(
    sounding: Sounding,
    received: list[TimeSignal],
    region: SearchRegion,
    sparsity_threshold: float | None,
) -> list[AmbiguitySurface]:
    """Cross-ambiguity of every received segment against its sounding segment.

    Pulsones use the sparse DD path; chirps spread over the whole DD period
    and use the dense one.
    """
    threshold = sparsity_threshold if sounding.waveform == Waveform.zak_otfs else None
    return [
        cross_ambiguity_dd(zak_transform(y, sounding.grid), x_dd, region, threshold)
        for y, x_dd in zip(received, sounding.segments_dd, strict=True)
    ]


def estimate_targets(
    sounding: Sounding,
    surfaces: list[AmbiguitySurface],
    max_count: int,
    detection: DetectionConfig,
) -> tuple[list[TargetEstimate], int]:
    """Run the waveform's estimator; returns the estimates and the ghosts rejected."""
    grid = sounding.grid
    match sounding.waveform:
        case Waveform.zak_otfs:
            estimates = detect_peaks(
                surfaces[0],
                max_count,
                detection.rel_threshold,
                exclusion=(grid.delay_resolution, grid.doppler_resolution),
            )
            return estimates, 0
        case Waveform.chirp_single_pair:
            candidates = _pair_candidates(sounding, surfaces, 0, max_count, detection)
            return candidates[:max_count], 0
        case Waveform.chirp_two_pairs:
            first = _pair_candidates(sounding, surfaces, 0, max_count, detection)
            second = _pair_candidates(sounding, surfaces, 2, max_count, detection)
            survivors = ghost_removal(
                first, second, (grid.delay_resolution, 1.0 / sounding.segment_duration)
            )
            log.debug("ghost removal kept %d of %d candidates", len(survivors), len(first))
            return survivors[:max_count], len(first) - len(survivors)
        case _:
            msg = f"unsupported waveform: {sounding.waveform}"
            raise ConfigurationError(msg)


def _pair_candidates(
    sounding: Sounding,
    surfaces: list[AmbiguitySurface],
    up: int,
    max_count: int,
    detection: DetectionConfig,
) -> list[TargetEstimate]:
    return chirp_intersections(
        surfaces[up],
        surfaces[up + 1],
        (sounding.slopes[up], sounding.slopes[up + 1]),
        max_count,
        detection.rel_threshold,
        detection.ridge_min_points,
        sounding.segment_duration,
    )


def run_pipeline(
    sounding: Sounding,
    scene: RadarScene,
    region: SearchRegion,
    detection: DetectionConfig,
    sparsity_threshold: float | None,
    max_count: int,
    snr_db: float | None = None,
    seed: int = 0,
    trial: int | None = None,
    snap_to_grid: bool = True,
    noise_stream: int = 0,
) -> tuple[DetectionReport, list[AmbiguitySurface]]:
    """Transmit, receive, correlate and detect for one scene."""
    received = receive(sounding, scene, snr_db, seed, trial, snap_to_grid, noise_stream)
    surfaces = segment_surfaces(sounding, received, region, sparsity_threshold)
    crystallized = len(scene) == 0 or crystallization_check(scene, sounding.grid)
    if not crystallized and sounding.waveform == Waveform.zak_otfs:
        log.warning("scene violates the crystallization condition; detections may alias")
    estimates, ghosts = estimate_targets(sounding, surfaces, max_count, detection)
    return DetectionReport(estimates, ghosts, crystallized), surfaces


def scene_region(scene: RadarScene, grid: DDGrid, margin: float) -> SearchRegion:
    """Get the region around a nonempty scene, widened by `margin` resolutions."""
    return SearchRegion.around(
        [t.tau for t in scene],
        [t.nu for t in scene],
        margin * grid.delay_resolution,
        margin * grid.doppler_resolution,
    )
