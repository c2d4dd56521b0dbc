# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Filtered chirps and chirp schedules, synthesized in the time domain as u = w₁ ⋆ (W₂·c)."""

import logging
import math

import numpy as np
import scipy.fft

from ddradar.config.enums import Waveform
from ddradar.config.errors import AliasingChirpError, ConfigurationError
from ddradar.dd_core import DDGrid, TimeSignal

from .gaussian import W2, delay_kernel
from .typing import ChirpParams, ChirpSchedule, GaussianFilterParams

log = logging.getLogger(__name__)


def centered_time(grid: DDGrid, center: float) -> np.ndarray:
    """Get sample times relative to `center`, wrapped into [-Q·T/2, Q·T/2)."""
    half = 0.5 * grid.period
    return np.mod(grid.time_axis() - center + half, grid.period) - half


def cyclic_filter(g: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Cyclic convolution of samples with a kernel stored at index k mod L."""
    return scipy.fft.ifft(scipy.fft.fft(g) * scipy.fft.fft(kernel))


def make_filtered_chirp(
    params: ChirpParams,
    filter: GaussianFilterParams,  # noqa: A002
    grid: DDGrid,
    energy: float = 1.0,
    truncation: int = 5,
    support: float | None = None,
) -> TimeSignal:
    """Synthesize a chirp segment windowed by W₂ and filtered by w₁.

    The chirp phase πa·s² and the window W₂(s) are taken about the segment
    center; W₂ uses the segment duration. `support` is the half-width kept
    about the center and defaults to half the segment, so the segments of a
    schedule do not overlap. It never reaches past the Nyquist frequency.
    """
    nyquist = 0.5 * grid.sample_rate
    reach = abs(params.slope) * params.duration / 2
    if reach > nyquist:
        raise AliasingChirpError(reach, nyquist)
    seg_filter = filter.with_duration(params.duration)
    s = centered_time(grid, params.center)
    span = 0.5 * params.duration if support is None else support
    if params.slope != 0:
        span = min(span, nyquist / abs(params.slope))
    g = np.where(
        (s >= -span) & (s < span),
        W2(s, seg_filter) * np.exp(1j * np.pi * params.slope * np.square(s)),
        0.0,
    )
    u = cyclic_filter(g, delay_kernel(filter, grid, truncation))
    signal = TimeSignal.on_grid(grid, u)
    if signal.energy == 0:
        msg = "filtered chirp has zero energy"
        raise ConfigurationError(msg)
    log.debug(
        "chirp slope=%g Hz² duration=%g s center=%g s", params.slope, params.duration, params.center
    )
    return signal.scaled(math.sqrt(energy / signal.energy))


def chirp_schedule(kind: Waveform | str, grid: DDGrid) -> ChirpSchedule:
    """Build the chirp schedule of a waveform family over [-T/2, T/2].

    A single pair is an up-chirp (2B/T) then a down-chirp (-2B/T), T/2 each.
    Two pairs use T/4 segments with slopes 2B/T, -2B/T, 4B/T, -4B/T.
    """
    kind = Waveform(kind)
    b, t = grid.bandwidth, grid.duration
    start = -t / 2
    match kind:
        case Waveform.chirp_single_pair:
            slopes, seg = [2 * b / t, -2 * b / t], t / 2
        case Waveform.chirp_two_pairs:
            slopes, seg = [2 * b / t, -2 * b / t, 4 * b / t, -4 * b / t], t / 4
        case _:
            msg = f"waveform {kind.value} has no chirp schedule"
            raise ConfigurationError(msg)
    return ChirpSchedule(
        tuple(ChirpParams(a, seg, start + i * seg) for i, a in enumerate(slopes))
    )


def synthesize_schedule(
    schedule: ChirpSchedule,
    filter: GaussianFilterParams,  # noqa: A002
    grid: DDGrid,
    truncation: int = 5,
) -> list[TimeSignal]:
    """Synthesize every segment with energy 1/(number of segments)."""
    share = 1.0 / len(schedule)
    return [
        make_filtered_chirp(segment, filter, grid, energy=share, truncation=truncation)
        for segment in schedule.segments
    ]
