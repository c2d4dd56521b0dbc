# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Zak-OTFS pulsones: a filtered DD impulse and its pulse-train realization."""

import logging
import math

import numpy as np

from ddradar.config.errors import OutsideFundamentalDomainError
from ddradar.dd_core import (
    DDGrid,
    DDSignal,
    TimeSignal,
    inverse_zak,
    twisted_convolve,
)

from .chirp import cyclic_filter
from .gaussian import W2_periodized, delay_kernel, gaussian_filter_taps
from .typing import PulsoneParams

log = logging.getLogger(__name__)


def pulsone_bin(params: PulsoneParams, grid: DDGrid) -> tuple[int, int]:
    """Get the DD bin of the pulsone offset (τ₀, ν₀)."""
    if not (0 <= params.tau_0 < grid.tau_p and 0 <= params.nu_0 < grid.nu_p):
        raise OutsideFundamentalDomainError(params.tau_0, params.nu_0)
    k0 = round(params.tau_0 / grid.dtau) % grid.delay_bins
    l0 = round(params.nu_0 / grid.dnu) % grid.doppler_bins
    return k0, l0


def make_pulsone(
    params: PulsoneParams, grid: DDGrid, truncation: int = 5
) -> tuple[DDSignal, TimeSignal]:
    """Build a unit-energy pulsone as w ∗σ δ(τ₀, ν₀) and its inverse Zak transform."""
    k0, l0 = pulsone_bin(params, grid)
    w = gaussian_filter_taps(params.filter, grid, truncation)
    x_dd = twisted_convolve(w, DDSignal.impulse(grid, k0, l0))
    x = inverse_zak(x_dd)
    scale = 1.0 / math.sqrt(x.energy)
    log.debug("pulsone at bin (%d, %d), %d filter taps", k0, l0, w.values.size)
    return x_dd.scaled(scale), x.scaled(scale)


def pulsone_td(params: PulsoneParams, grid: DDGrid, truncation: int = 5) -> TimeSignal:
    """Build the same pulsone directly in time as w₁ ⋆ (W₂·p_{τ₀,ν₀}).

    p is the sampled pulse train with one pulse per delay period and tone
    phase e^{j2π·ν₀·n·τ_p}; W₂ is periodized over the Q·T axis.
    """
    k0, l0 = pulsone_bin(params, grid)
    c = math.ceil(grid.N / 2)
    j = np.arange(grid.doppler_bins)
    train = np.zeros(grid.length, dtype=np.complex128)
    train[k0 + j * grid.delay_bins] = (
        math.sqrt(grid.tau_p)
        * grid.sample_rate
        * np.exp(2j * np.pi * (j - c) * l0 / grid.doppler_bins)
    )
    window = W2_periodized(grid.time_axis(), params.filter, grid.period)
    u = cyclic_filter(window * train, delay_kernel(params.filter, grid, truncation))
    signal = TimeSignal.on_grid(grid, u)
    return signal.scaled(1.0 / math.sqrt(signal.energy))


def papr_db(signal: TimeSignal, grid: DDGrid | None = None) -> float:
    """Peak-to-average power ratio in dB over the observation window, or the whole signal."""
    samples = signal.samples if grid is None else signal.samples[: grid.window_length]
    power = np.square(np.abs(samples))
    return float(10 * np.log10(power.max() / power.mean()))
