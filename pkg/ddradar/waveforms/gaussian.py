# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Gaussian pulse-shaping filters in the delay-Doppler and time domains."""

import math

import numpy as np

from ddradar.config.errors import ConfigurationError
from ddradar.dd_core import DDGrid, DDPatch

from .typing import GaussianFilterParams

MIN_TRUNCATION = 3


def _reach(bins: float) -> int:
    return math.ceil(bins - 1e-9)


def w1(tau: np.ndarray | float, params: GaussianFilterParams) -> np.ndarray:
    """Delay profile (2αB²/π)^{1/4}·e^{-αB²τ²}."""
    a = params.alpha * params.bandwidth**2
    return (2 * a / np.pi) ** 0.25 * np.exp(-a * np.square(tau))


def w2(nu: np.ndarray | float, params: GaussianFilterParams) -> np.ndarray:
    """Doppler profile (2βT²/π)^{1/4}·e^{-βT²ν²}."""
    b = params.beta * params.duration**2
    return (2 * b / np.pi) ** 0.25 * np.exp(-b * np.square(nu))


def W2(t: np.ndarray | float, params: GaussianFilterParams) -> np.ndarray:  # noqa: N802
    """Time window, the inverse Fourier transform of w₂."""
    b = params.beta * params.duration**2
    return (2 * b / np.pi) ** 0.25 * np.sqrt(np.pi / b) * np.exp(-np.pi**2 * np.square(t) / b)


def W2_periodized(t: np.ndarray, params: GaussianFilterParams, period: float) -> np.ndarray:  # noqa: N802
    """Σ_m W₂(t - m·period), the window seen through a sampled Doppler axis."""
    reach = int(np.ceil(6 * params.duration / period)) + 1
    out = np.zeros_like(np.asarray(t, dtype=np.float64))
    for m in range(-reach, reach + 1):
        out += W2(t - m * period, params)
    return out


def gaussian_filter_taps(
    params: GaussianFilterParams, grid: DDGrid, truncation: int = 5
) -> DDPatch:
    """Sample w₁(kΔτ)·w₂(lΔν) on a patch of ±truncation resolutions around the origin."""
    if truncation < MIN_TRUNCATION:
        msg = f"filter truncation must be at least {MIN_TRUNCATION} resolutions, got {truncation}"
        raise ConfigurationError(msg)
    kmax = _reach(truncation * grid.sample_rate / params.bandwidth)
    lmax = _reach(truncation * grid.period / params.duration)
    k = np.arange(-kmax, kmax + 1)
    l = np.arange(-lmax, lmax + 1)  # noqa: E741
    values = np.outer(w1(k * grid.dtau, params), w2(l * grid.dnu, params))
    return DDPatch(grid, values.astype(np.complex128), -kmax, -lmax)


def matched_filter_of(w: DDPatch) -> DDPatch:
    """Get w*(-τ, -ν)·e^{j2πτν} tap by tap."""
    grid = w.grid
    values = np.conj(w.values[::-1, ::-1])
    k_start = -(w.k_stop - 1)
    l_start = -(w.l_stop - 1)
    k = np.arange(k_start, k_start + values.shape[0])
    l = np.arange(l_start, l_start + values.shape[1])  # noqa: E741
    phase = np.exp(2j * np.pi * np.outer(k, l) * grid.cell_area)
    return DDPatch(grid, values * phase, k_start, l_start)


def delay_kernel(params: GaussianFilterParams, grid: DDGrid, truncation: int = 5) -> np.ndarray:
    """Get Δt·w₁ sampled on the cyclic time axis, tap k stored at index k mod L."""
    kmax = _reach(truncation * grid.sample_rate / params.bandwidth)
    k = np.arange(-kmax, kmax + 1)
    kernel = np.zeros(grid.length, dtype=np.float64)
    np.add.at(kernel, np.mod(k, grid.length), grid.dt * w1(k * grid.dt, params))
    return kernel
