# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""The sampled Zak transform and its inverse.

Sample i of the cyclic time axis is split as i = k + j·P·M with delay bin
0 <= k < P·M and period index 0 <= j < Q·N; it sits at time
k/(P·B) + n·τ_p with n = j - ceil(N/2).
"""

import math

import numpy as np
import scipy.fft

from ddradar.config.errors import GridMismatchError

from .grid import DDGrid
from .signals import DDSignal, TimeSignal


def _centering_phase(grid: DDGrid) -> np.ndarray:
    c = math.ceil(grid.N / 2)
    l = np.arange(grid.doppler_bins)  # noqa: E741
    return np.exp(2j * np.pi * c * l / grid.doppler_bins)


def zak_transform(x: TimeSignal, grid: DDGrid) -> DDSignal:
    """Map a time signal to its quasi-periodic DD representation.

    Z[k, l] = √τ_p · Σ_n x(k/(P·B) + n·τ_p) · e^{-j2π·n·l/(Q·N)}, one
    Q·N-point FFT per delay bin.
    """
    x.check_grid(grid, "zak_transform")
    columns = x.samples.reshape(grid.doppler_bins, grid.delay_bins).T
    spectrum = scipy.fft.fft(columns, axis=1)
    values = math.sqrt(grid.tau_p) * spectrum * _centering_phase(grid)[None, :]
    return DDSignal(grid, values)


def inverse_zak(x_dd: DDSignal) -> TimeSignal:
    """Map a DD signal back to the time domain.

    x(k/(P·B) + n·τ_p) = (1/√τ_p) · mean_l Z[k, l] · e^{j2π·n·l/(Q·N)}.
    """
    grid = x_dd.grid
    columns = scipy.fft.ifft(
        x_dd.values * np.conj(_centering_phase(grid))[None, :], axis=1
    )
    samples = (columns / math.sqrt(grid.tau_p)).T.reshape(-1)
    return TimeSignal.on_grid(grid, samples)


def quasi_periodic_value(x_dd: DDSignal, k: int, l: int) -> complex:  # noqa: E741
    """Evaluate a DD signal at any bin through its quasi-periodic extension."""
    grid = x_dd.grid
    n, k_mod = divmod(int(k), grid.delay_bins)
    l_mod = int(l) % grid.doppler_bins
    phase = np.exp(2j * np.pi * n * l_mod / grid.doppler_bins)
    return complex(x_dd.values[k_mod, l_mod] * phase)


def quasi_shift(values: np.ndarray, grid: DDGrid, dk: int, dl: int) -> np.ndarray:
    """Get S[k, l] = x̃[k - dk, l - dl] on the fundamental domain.

    x̃ is the quasi-periodic extension of `values`.
    """
    rolled = np.roll(values, (int(dk), int(dl)), axis=(0, 1))
    n = np.floor_divide(np.arange(grid.delay_bins) - int(dk), grid.delay_bins)
    l_mod = np.mod(np.arange(grid.doppler_bins) - int(dl), grid.doppler_bins)
    if not n.any():
        return rolled
    phase = np.exp(2j * np.pi * np.outer(n, l_mod) / grid.doppler_bins)
    return rolled * phase


def dd_inner_product(a_dd: DDSignal, b_dd: DDSignal) -> complex:
    """Riemann sum of a·conj(b) over the fundamental domain."""
    if a_dd.grid != b_dd.grid:
        raise GridMismatchError("dd_inner_product")
    return complex(np.vdot(b_dd.values, a_dd.values)) * a_dd.grid.cell_area
