# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import math

import numpy as np
import pytest

from ddradar.channel import (
    add_awgn,
    apply_scene,
    crystallization_check,
    delay_residuals,
    make_rng,
    snap_delay,
)
from ddradar.config import ConfigurationError, DelayOutOfRangeError, OffGridDelayError
from ddradar.dd_core import DDGrid
from ddradar.model import RadarScene, Target

US = 1e-6


def test_identity_channel(tiny_grid, random_signal):
    x = random_signal(tiny_grid)
    y = apply_scene(RadarScene([Target(1.0, 0.0, 0.0)]), x, tiny_grid)
    np.testing.assert_allclose(y.samples, x.samples)


def test_pure_delay_is_a_cyclic_shift(tiny_grid, random_signal):
    x = random_signal(tiny_grid)
    y = apply_scene(RadarScene([Target(1.0, 3 * tiny_grid.dtau, 0.0)]), x, tiny_grid)
    np.testing.assert_allclose(y.samples, np.roll(x.samples, 3))


def test_pure_doppler_is_a_phase_ramp(tiny_grid, random_signal):
    x = random_signal(tiny_grid)
    nu = 2 * tiny_grid.dnu
    y = apply_scene(RadarScene([Target(0.5j, 0.0, nu)]), x, tiny_grid)
    expected = 0.5j * np.exp(2j * np.pi * nu * tiny_grid.time_axis()) * x.samples
    np.testing.assert_allclose(y.samples, expected, atol=1e-12)


def test_channel_is_linear(tiny_grid, random_signal):
    scene = RadarScene([Target(1.0, 2 * tiny_grid.dtau, tiny_grid.dnu), Target(-0.5, 0.0, 0.0)])
    a, b = random_signal(tiny_grid), random_signal(tiny_grid)
    combined = apply_scene(scene, a.scaled(2.0) + b, tiny_grid)
    separate = apply_scene(scene, a, tiny_grid).scaled(2.0) + apply_scene(scene, b, tiny_grid)
    np.testing.assert_allclose(combined.samples, separate.samples, atol=1e-12)


def test_delay_outside_guard_raises(tiny_grid, random_signal):
    x = random_signal(tiny_grid)
    too_far = (tiny_grid.Q - 1) * tiny_grid.duration
    with pytest.raises(DelayOutOfRangeError):
        apply_scene(RadarScene([Target(1.0, too_far, 0.0)]), x, tiny_grid)


def test_negative_delay_is_rejected():
    with pytest.raises(DelayOutOfRangeError):
        Target(1.0, -1e-9, 0.0)


def test_zero_gain_is_rejected():
    with pytest.raises(ConfigurationError):
        Target(0.0, 1e-6, 0.0)


def test_snapping(tiny_grid):
    tau = 0.31 / tiny_grid.bandwidth
    k, residual = snap_delay(tau, tiny_grid)
    assert k == 1
    assert residual == pytest.approx(tau - tiny_grid.dtau)
    assert delay_residuals(RadarScene([Target(1.0, tau, 0.0)]), tiny_grid) == pytest.approx(
        [tau - tiny_grid.dtau]
    )
    with pytest.raises(OffGridDelayError):
        snap_delay(tau, tiny_grid, snap_to_grid=False)
    assert snap_delay(4 * tiny_grid.dtau, tiny_grid, snap_to_grid=False) == (4, pytest.approx(0.0))


def test_noise_free_returns_the_signal(tiny_grid, random_signal):
    x = random_signal(tiny_grid)
    assert add_awgn(x, None, 0) is x
    assert add_awgn(x, math.inf, 0) is x


def test_noise_is_reproducible(tiny_grid, random_signal):
    x = random_signal(tiny_grid)
    a = add_awgn(x, 0.0, 7, trial=3, grid=tiny_grid)
    b = add_awgn(x, 0.0, 7, trial=3, grid=tiny_grid)
    c = add_awgn(x, 0.0, 7, trial=4, grid=tiny_grid)
    np.testing.assert_array_equal(a.samples, b.samples)
    assert not np.array_equal(a.samples, c.samples)


def test_noise_streams_are_independent():
    a = make_rng(1, 2, 0).standard_normal(4)
    b = make_rng(1, 2, 1).standard_normal(4)
    assert not np.array_equal(a, b)
    np.testing.assert_array_equal(make_rng(5).standard_normal(3), make_rng(5).standard_normal(3))


def test_noise_power_follows_snr(tiny_grid, random_signal):
    x = random_signal(tiny_grid)
    snr_db = 10.0
    power = []
    for seed in range(100):
        noise = add_awgn(x, snr_db, seed, grid=tiny_grid).samples - x.samples
        power.append(np.mean(np.square(np.abs(noise))))
    signal = float(np.vdot(x.samples, x.samples).real) / tiny_grid.window_length
    measured = 10 * np.log10(signal / np.mean(power))
    assert measured == pytest.approx(snr_db, abs=0.5)


def test_noise_reference_sets_the_variance(tiny_grid, random_signal):
    x = random_signal(tiny_grid)
    quiet = x.scaled(1e-3)
    a = add_awgn(quiet, 0.0, 1, grid=tiny_grid, reference=x).samples - quiet.samples
    b = add_awgn(x, 0.0, 1, grid=tiny_grid).samples - x.samples
    np.testing.assert_allclose(a, b)


def test_crystallization():
    grid = DDGrid(100 * US, 4e6, 20e-3)
    inside = RadarScene([Target(1.0, 0.0, -4e3), Target(1.0, 90 * US, 4e3)])
    assert crystallization_check(inside, grid)
    spread = RadarScene([Target(1.0, 0.0, 0.0), Target(1.0, 150 * US, 0.0)])
    assert not crystallization_check(spread, grid)
    assert crystallization_check(RadarScene([Target(1.0, 1 * US, 0.0)]), grid)
