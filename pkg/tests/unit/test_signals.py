# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import numpy as np
import pytest

from ddradar.config import (
    GridMismatchError,
    SampleRateMismatchError,
    SignalLengthError,
)
from ddradar.dd_core import DDGrid, DDPatch, DDSignal, TimeSignal


def test_time_signal_energy(tiny_grid):
    x = TimeSignal.zeros(tiny_grid)
    x.samples[3] = 2.0
    assert x.energy == pytest.approx(4 * tiny_grid.dt)


def test_energy_between_uses_half_open_interval(tiny_grid):
    x = TimeSignal.on_grid(tiny_grid, np.ones(tiny_grid.length))
    t0 = tiny_grid.t_start
    assert x.energy_between(t0, t0 + 10 * tiny_grid.dt) == pytest.approx(10 * tiny_grid.dt)


def test_on_grid_rejects_wrong_length(tiny_grid):
    with pytest.raises(SignalLengthError):
        TimeSignal.on_grid(tiny_grid, np.zeros(10))


def test_addition_checks_axes(tiny_grid):
    x = TimeSignal.zeros(tiny_grid)
    other = TimeSignal.zeros(DDGrid(8e-6, 2e6, 64e-6))
    with pytest.raises((SampleRateMismatchError, SignalLengthError)):
        x + other


def test_inner_product_is_conjugate_linear(tiny_grid, random_signal):
    x, y = random_signal(tiny_grid), random_signal(tiny_grid)
    assert x.inner(y) == pytest.approx(np.conj(y.inner(x)))
    assert x.scaled(2j).inner(y) == pytest.approx(2j * x.inner(y))
    assert x.inner(x).real == pytest.approx(x.energy)


def test_dd_impulse_stores_amplitude_over_cell(tiny_grid):
    x = DDSignal.impulse(tiny_grid, 17, -1, amplitude=0.5)
    k, l = np.nonzero(x.values)  # noqa: E741
    assert (int(k[0]), int(l[0])) == (1, 15)
    assert x.values[1, 15] == pytest.approx(0.5 / tiny_grid.cell_area)
    assert x.energy == pytest.approx(0.25 / tiny_grid.cell_area)


def test_dd_signal_rejects_wrong_shape(tiny_grid):
    with pytest.raises(GridMismatchError):
        DDSignal(tiny_grid, np.zeros((3, 3), dtype=complex))


def test_patch_from_taps_accumulates_repeated_bins(tiny_grid):
    patch = DDPatch.from_taps(tiny_grid, [-1, 2, 2], [0, 3, 3], [1.0, 2.0, 0.5j])
    assert (patch.k_start, patch.l_start) == (-1, 0)
    assert patch.values.shape == (4, 4)
    assert patch.value_at(2, 3) == pytest.approx(2.0 + 0.5j)
    assert patch.value_at(-1, 0) == pytest.approx(1.0)
    assert patch.value_at(50, 50) == 0


def test_patch_taps_threshold(tiny_grid):
    patch = DDPatch.from_taps(tiny_grid, [0, 1], [0, 0], [1.0, 1e-3])
    k, l, v = patch.taps(rel_threshold=1e-2)  # noqa: E741
    assert k.tolist() == [0]
    assert l.tolist() == [0]
    assert v.tolist() == [1.0]


def test_patch_addition_covers_union(tiny_grid):
    a = DDPatch.impulse(tiny_grid, -2, 1)
    b = DDPatch.impulse(tiny_grid, 3, -4)
    s = a + b
    assert (s.k_start, s.l_start, s.k_stop, s.l_stop) == (-2, -4, 4, 2)
    assert s.value_at(-2, 1) == pytest.approx(1 / tiny_grid.cell_area)
    assert s.value_at(3, -4) == pytest.approx(1 / tiny_grid.cell_area)
