# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import numpy as np
import pytest

from ddradar.config import DetectionConfig, FilterConfig, Waveform
from ddradar.config.models import GridConfig
from ddradar.experiments import make_grid, make_sounding, receive, run_pipeline, scene_region
from ddradar.model import RadarScene, Target

US = 1e-6


def test_make_grid():
    grid = make_grid(GridConfig())
    assert (grid.M, grid.N) == (50, 40)
    assert grid.shape == (100, 80)


def test_zak_sounding(ci_grid):
    sounding = make_sounding(Waveform.zak_otfs, ci_grid, FilterConfig())
    assert len(sounding.segments) == 1
    assert sounding.slopes == ()
    assert sounding.energy == pytest.approx(1.0, rel=1e-6)


@pytest.mark.parametrize(("waveform", "count"), [(Waveform.chirp_single_pair, 2), (Waveform.chirp_two_pairs, 4)])
def test_chirp_soundings(ci_grid, waveform, count):
    sounding = make_sounding(waveform, ci_grid, FilterConfig())
    assert len(sounding.segments) == len(sounding.segments_dd) == len(sounding.slopes) == count
    assert sounding.segment_duration == pytest.approx(ci_grid.duration / count)
    assert sounding.energy == pytest.approx(1.0, rel=1e-3)
    assert sounding.slopes[0] > 0 > sounding.slopes[1]


def test_receive_draws_a_stream_per_segment(ci_grid):
    sounding = make_sounding(Waveform.chirp_single_pair, ci_grid, FilterConfig())
    scene = RadarScene([Target(1.0, 2 * US, 500.0)])
    clean = receive(sounding, scene, None, 0)
    noisy = receive(sounding, scene, 0.0, 0)
    again = receive(sounding, scene, 0.0, 0)
    assert len(clean) == len(noisy) == 2
    noise = [n.samples - c.samples for n, c in zip(noisy, clean, strict=True)]
    assert not np.allclose(noise[0], noise[1])
    for a, b in zip(noisy, again, strict=True):
        np.testing.assert_array_equal(a.samples, b.samples)


def test_scene_region(ci_grid):
    scene = RadarScene([Target(1.0, 1 * US, -400.0), Target(1.0, 3 * US, 175.0)])
    region = scene_region(scene, ci_grid, 2.0)
    assert region.tau_min == 0.0
    assert region.tau_max == pytest.approx(5 * US)
    assert region.nu_max == pytest.approx(1400.0)


def test_zak_pipeline_finds_an_on_grid_target(ci_grid):
    sounding = make_sounding(Waveform.zak_otfs, ci_grid, FilterConfig())
    scene = RadarScene([Target(0.7j, 4 * ci_grid.dtau, 2 * ci_grid.dnu)])
    region = scene_region(scene, ci_grid, 2.0)
    report, surfaces = run_pipeline(sounding, scene, region, DetectionConfig(), 1e-4, max_count=1)
    assert len(surfaces) == 1
    assert report.crystallized
    [est] = report.estimates
    assert est.tau_hat == pytest.approx(4 * ci_grid.dtau)
    assert est.nu_hat == pytest.approx(2 * ci_grid.dnu)
    assert est.h_hat == pytest.approx(0.7j, rel=1e-2)
