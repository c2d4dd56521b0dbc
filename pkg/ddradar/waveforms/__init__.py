# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Sounding waveform synthesis: Gaussian pulse shaping, filtered chirps and Zak-OTFS pulsones."""

from .chirp import chirp_schedule, make_filtered_chirp, synthesize_schedule
from .gaussian import (
    W2,
    gaussian_filter_taps,
    matched_filter_of,
    w1,
    w2,
)
from .pulsone import make_pulsone, papr_db, pulsone_td
from .typing import ChirpParams, ChirpSchedule, GaussianFilterParams, PulsoneParams

__all__ = [
    "W2",
    "ChirpParams",
    "ChirpSchedule",
    "GaussianFilterParams",
    "PulsoneParams",
    "chirp_schedule",
    "gaussian_filter_taps",
    "make_filtered_chirp",
    "make_pulsone",
    "matched_filter_of",
    "papr_db",
    "pulsone_td",
    "synthesize_schedule",
    "w1",
    "w2",
]
