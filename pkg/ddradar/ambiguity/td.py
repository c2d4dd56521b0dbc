# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Direct time-domain cross-ambiguity, the reference for the DD method."""

import logging

import numpy as np

from ddradar.dd_core import TimeSignal

from .surface import AmbiguitySurface, SearchRegion

log = logging.getLogger(__name__)


def cross_ambiguity_td(y: TimeSignal, x: TimeSignal, region: SearchRegion) -> AmbiguitySurface:
    """Evaluate A(τ, ν) = ∫ y(t)·x*(t - τ)·e^{-j2πν(t - τ)} dt as a Riemann sum.

    The time axis is cyclic; the Doppler bin width is one over its period.
    Cost is O(L) per region bin.
    """
    y.check_compatible(x, "cross_ambiguity_td")
    length = x.samples.size
    dt = x.dt
    dnu = 1.0 / (length * dt)
    k, l = region.bins(dt, dnu, (length, length))  # noqa: E741
    nu = l * dnu
    t = x.times
    doppler = np.exp(-2j * np.pi * np.outer(nu, t))
    values = np.empty((k.size, l.size), dtype=np.complex128)
    for row, kk in enumerate(k):
        v = y.samples * np.conj(np.roll(x.samples, kk))
        values[row] = dt * (doppler @ v) * np.exp(2j * np.pi * nu * kk * dt)
    log.debug("time-domain ambiguity over %d×%d bins", k.size, l.size)
    return AmbiguitySurface(region, k, l, dt, dnu, values, x.energy)
