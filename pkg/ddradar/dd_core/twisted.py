# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Discrete twisted convolution of sampled DD functions.

(a ∗σ b)[k, l] = ΔτΔν · Σ a[k', l'] · b[k - k', l - l'] · e^{j2π·l'·(k - k')·ΔτΔν}
"""

import logging
from typing import overload

import numpy as np

from ddradar.config.errors import ConfigurationError, GridMismatchError

from .signals import DDPatch, DDSignal
from .zak import quasi_shift

log = logging.getLogger(__name__)

# Scatter over the nonzeros of a quasi-periodic operand when it is sparser than this.
_SCATTER_DENSITY = 0.125


@overload
def twisted_convolve(a: DDPatch, b: DDPatch) -> DDPatch: ...


@overload
def twisted_convolve(a: DDPatch, b: DDSignal) -> DDSignal: ...


def twisted_convolve(a: DDPatch, b: DDPatch | DDSignal) -> DDPatch | DDSignal:
    """Twisted-convolve an aperiodic patch with a patch or a quasi-periodic signal.

    Not commutative. With a quasi-periodic `b` the result is quasi-periodic.
    """
    if not isinstance(a, DDPatch):
        msg = "the left operand of a twisted convolution must be an aperiodic DDPatch"
        raise ConfigurationError(msg)
    if a.grid != b.grid:
        raise GridMismatchError("twisted_convolve")
    if isinstance(b, DDPatch):
        return _patch_patch(a, b)
    nnz = np.count_nonzero(b.values)
    scatter = nnz <= _SCATTER_DENSITY * b.values.size
    log.debug("twisted convolution against %d nonzero DD bins, scatter=%s", nnz, scatter)
    if scatter:
        return _patch_signal_scatter(a, b)
    return _patch_signal_dense(a, b)


def _patch_patch(a: DDPatch, b: DDPatch) -> DDPatch:
    grid = a.grid
    theta = 2 * np.pi * grid.cell_area
    out = np.zeros(
        (a.values.shape[0] + b.values.shape[0] - 1, a.values.shape[1] + b.values.shape[1] - 1),
        dtype=np.complex128,
    )
    kb = b.delay_bins()
    nk, nl = b.values.shape
    ka, la, va = a.taps()
    for k1, l1, v in zip(ka, la, va, strict=True):
        i = k1 - a.k_start
        j = l1 - a.l_start
        kernel = np.exp(1j * theta * l1 * kb)[:, None]
        out[i : i + nk, j : j + nl] += v * b.values * kernel
    return DDPatch(grid, out * grid.cell_area, a.k_start + b.k_start, a.l_start + b.l_start)


def _patch_signal_dense(a: DDPatch, b: DDSignal) -> DDSignal:
    grid = b.grid
    theta = 2 * np.pi * grid.cell_area
    k = np.arange(grid.delay_bins)
    out = np.zeros(grid.shape, dtype=np.complex128)
    ka, la, va = a.taps()
    for k1, l1, v in zip(ka, la, va, strict=True):
        kernel = np.exp(1j * theta * l1 * (k - k1))[:, None]
        out += v * quasi_shift(b.values, grid, k1, l1) * kernel
    return DDSignal(grid, out * grid.cell_area)


def _patch_signal_scatter(a: DDPatch, b: DDSignal) -> DDSignal:
    grid = b.grid
    kb, lb = np.nonzero(b.values)
    vb = b.values[kb, lb]
    ka, la, va = a.taps()
    out = np.zeros(grid.shape, dtype=np.complex128)
    if kb.size == 0 or ka.size == 0:
        return DDSignal(grid, out)
    k_abs = ka[:, None] + kb[None, :]
    l_abs = la[:, None] + lb[None, :]
    n, k_mod = np.divmod(k_abs, grid.delay_bins)
    l_mod = np.mod(l_abs, grid.doppler_bins)
    phase = la[:, None] * kb[None, :] * grid.cell_area - n * l_mod / grid.doppler_bins
    contrib = va[:, None] * vb[None, :] * np.exp(2j * np.pi * phase)
    np.add.at(out, (k_mod.ravel(), l_mod.ravel()), contrib.ravel())
    return DDSignal(grid, out * grid.cell_area)

