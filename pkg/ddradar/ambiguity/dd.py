# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Cross-ambiguity evaluated in the delay-Doppler domain.

A[k, l] = ΔτΔν · Σ_{k'', l''} conj(X[k'', l'']) · Ỹ[k + k'', l + l''] · e^{-j2π·l·k''·ΔτΔν}

where Ỹ is the quasi-periodic extension of the received DD signal. With a
sparsity threshold only the significant sounding taps enter the sum.
"""

import logging

import numpy as np
import scipy.fft

from ddradar.config.errors import GridMismatchError
from ddradar.dd_core import DDGrid, DDSignal, quasi_shift

from .surface import AmbiguitySurface, SearchRegion

log = logging.getLogger(__name__)

# Sounding taps are gathered in blocks of at most this many complex values.
_BLOCK_ELEMENTS = 1 << 21


def cross_ambiguity_dd(
    y_dd: DDSignal,
    x_dd: DDSignal,
    region: SearchRegion,
    sparsity_threshold: float | None = 1e-4,
) -> AmbiguitySurface:
    """Evaluate the cross-ambiguity of y against x on the region's bins.

    Sounding taps with |x| below `sparsity_threshold`·peak are skipped; `None`
    keeps every tap and correlates along Doppler with FFTs instead.
    """
    if y_dd.grid != x_dd.grid:
        raise GridMismatchError("cross_ambiguity_dd")
    grid = x_dd.grid
    k, l = region.bins(grid.dtau, grid.dnu)  # noqa: E741
    if sparsity_threshold is None:
        values = _dense(y_dd.values, x_dd.values, grid, k, l)
    else:
        values = _sparse(y_dd.values, x_dd.values, grid, k, l, sparsity_threshold)
    return AmbiguitySurface(region, k, l, grid.dtau, grid.dnu, values, x_dd.energy)


def _sparse(
    y: np.ndarray,
    x: np.ndarray,
    grid: DDGrid,
    k: np.ndarray,
    l: np.ndarray,  # noqa: E741
    threshold: float,
) -> np.ndarray:
    mag = np.abs(x)
    peak = mag.max(initial=0.0)
    ks, ls = np.nonzero((mag >= threshold * peak) & (mag > 0))
    log.debug("sparse DD ambiguity: %d sounding taps over %d×%d bins", ks.size, k.size, l.size)
    out = np.zeros((k.size, l.size), dtype=np.complex128)
    theta = 2 * np.pi * grid.cell_area
    block = max(1, _BLOCK_ELEMENTS // (k.size * l.size))
    for start in range(0, ks.size, block):
        k2, l2 = ks[start : start + block], ls[start : start + block]
        n, k_mod = np.divmod(k[None, :] + k2[:, None], grid.delay_bins)
        l_mod = np.mod(l[None, :] + l2[:, None], grid.doppler_bins)
        gathered = y[k_mod[:, :, None], l_mod[:, None, :]]
        phase = 2 * np.pi * n[:, :, None] * l_mod[:, None, :] / grid.doppler_bins
        phase -= theta * k2[:, None, None] * l[None, None, :]
        out += np.einsum("t,tkl->kl", np.conj(x[k2, l2]), gathered * np.exp(1j * phase))
    return out * grid.cell_area


def _dense(
    y: np.ndarray,
    x: np.ndarray,
    grid: DDGrid,
    k: np.ndarray,
    l: np.ndarray,  # noqa: E741
) -> np.ndarray:
    log.debug("dense DD ambiguity over %d×%d bins", k.size, l.size)
    out = np.empty((k.size, l.size), dtype=np.complex128)
    x_spectrum = np.conj(scipy.fft.fft(x, axis=1))
    k2 = np.arange(grid.delay_bins)
    kernel = np.exp(-2j * np.pi * grid.cell_area * np.outer(k2, l))
    l_mod = np.mod(l, grid.doppler_bins)
    for row, kk in enumerate(k):
        r = quasi_shift(y, grid, -kk, 0)
        corr = scipy.fft.ifft(scipy.fft.fft(r, axis=1) * x_spectrum, axis=1)
        out[row] = np.sum(corr[:, l_mod] * kernel, axis=0)
    return out * grid.cell_area
