# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import numpy as np
import pytest

from ddradar.channel import apply_scene
from ddradar.config import ConfigurationError
from ddradar.dd_core import DDPatch, DDSignal, twisted_convolve, zak_transform
from ddradar.dd_core.twisted import _patch_signal_dense, _patch_signal_scatter
from ddradar.model import RadarScene, Target


def _random_patch(grid, rng, shape, k_start, l_start):
    values = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return DDPatch(grid, values, k_start, l_start)


def _as_dense(patch, k, l):  # noqa: E741
    return np.array([[patch.value_at(a, b) for b in l] for a in k])


def test_impulses_compose_with_a_phase(tiny_grid):
    a = DDPatch.impulse(tiny_grid, 2, 3)
    b = DDPatch.impulse(tiny_grid, 5, -1)
    out = twisted_convolve(a, b)
    expected = np.exp(2j * np.pi * 3 * 5 * tiny_grid.cell_area) / tiny_grid.cell_area
    assert out.value_at(7, 2) == pytest.approx(expected)
    assert np.count_nonzero(np.abs(out.values) > 1e-9) == 1


def test_not_commutative(tiny_grid):
    a = DDPatch.impulse(tiny_grid, 1, 0)
    b = DDPatch.impulse(tiny_grid, 0, 1)
    ab = twisted_convolve(a, b).value_at(1, 1)
    ba = twisted_convolve(b, a).value_at(1, 1)
    assert abs(ab - ba) > 1e-3 * abs(ab)


def test_associative(tiny_grid, rng):
    a = _random_patch(tiny_grid, rng, (3, 2), -1, 0)
    b = _random_patch(tiny_grid, rng, (2, 3), 2, -1)
    c = _random_patch(tiny_grid, rng, (2, 2), 0, 4)
    left = twisted_convolve(twisted_convolve(a, b), c)
    right = twisted_convolve(a, twisted_convolve(b, c))
    k = np.arange(-2, 8)
    l = np.arange(-2, 10)  # noqa: E741
    np.testing.assert_allclose(_as_dense(left, k, l), _as_dense(right, k, l), atol=1e-9)


def test_dense_and_scatter_paths_agree(tiny_grid, rng):
    a = _random_patch(tiny_grid, rng, (4, 3), -2, -1)
    b = DDSignal.impulse(tiny_grid, 3, 14) + DDSignal.impulse(tiny_grid, 15, 0, 0.5j)
    dense = _patch_signal_dense(a, b).values
    scatter = _patch_signal_scatter(a, b).values
    np.testing.assert_allclose(dense, scatter, atol=1e-9 * np.abs(dense).max())


def test_impulse_identity(tiny_grid, random_signal):
    x_dd = zak_transform(random_signal(tiny_grid), tiny_grid)
    out = twisted_convolve(DDPatch.impulse(tiny_grid, 0, 0), x_dd)
    np.testing.assert_allclose(out.values, x_dd.values, atol=1e-9 * np.abs(x_dd.values).max())


def test_channel_acts_as_twisted_convolution(tiny_grid, random_signal):
    scene = RadarScene([
        Target(1.0, 0.0, 0.0),
        Target(0.3 - 0.4j, 3 * tiny_grid.dtau, 2 * tiny_grid.dnu),
        Target(0.2j, 40 * tiny_grid.dtau, -5 * tiny_grid.dnu),
    ])
    x = random_signal(tiny_grid)
    y_dd = zak_transform(apply_scene(scene, x, tiny_grid), tiny_grid)
    predicted = twisted_convolve(scene.as_patch(tiny_grid), zak_transform(x, tiny_grid))
    np.testing.assert_allclose(
        y_dd.values, predicted.values, atol=1e-9 * np.abs(y_dd.values).max()
    )


def test_left_operand_must_be_a_patch(tiny_grid):
    x_dd = DDSignal.impulse(tiny_grid, 0, 0)
    with pytest.raises(ConfigurationError):
        twisted_convolve(x_dd, x_dd)
