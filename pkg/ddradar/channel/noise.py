# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Receiver noise."""

import logging
import math

import numpy as np

from ddradar.dd_core import DDGrid, TimeSignal

log = logging.getLogger(__name__)


def make_rng(seed: int, trial: int | None = None, stream: int | None = None) -> np.random.Generator:
    """Get the RNG stream of a seed, of one trial under that seed, or of a sub-stream of a trial."""
    keys = [k for k in (trial, stream) if k is not None]
    return np.random.default_rng([seed, *keys] if keys else seed)


def add_awgn(
    x: TimeSignal,
    snr_db: float | None,
    rng_seed: int,
    trial: int | None = None,
    grid: DDGrid | None = None,
    *,
    stream: int | None = None,
    reference: TimeSignal | None = None,
) -> TimeSignal:
    """Add circularly-symmetric complex Gaussian noise at the requested SNR.

    The per-sample variance is Σ|r|²/(P·M·N·SNR) with r = `x`, or r =
    `reference` when the SNR refers to another received signal.
    `None` or +inf returns the signal unchanged.
    """
    if snr_db is None or math.isinf(snr_db):
        return x
    window = grid.window_length if grid is not None else x.samples.size
    r = (reference if reference is not None else x).samples
    energy = float(np.vdot(r, r).real)
    sigma2 = energy / (window * 10.0 ** (snr_db / 10.0))
    rng = make_rng(rng_seed, trial, stream)
    noise = rng.standard_normal(x.samples.size) + 1j * rng.standard_normal(x.samples.size)
    log.debug("awgn snr=%g dB sigma2=%g", snr_db, sigma2)
    return x + TimeSignal(noise * math.sqrt(sigma2 / 2), x.sample_rate, x.t_start)
