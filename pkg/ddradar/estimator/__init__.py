# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Target estimation from ambiguity surfaces."""

from .chirp_lines import (
    RidgeLine,
    chirp_intersections,
    ghost_removal,
    ridge_lines,
    ridge_points,
)
from .peaks import detect_peaks, detect_single
from .scoring import region_miss_penalty, rms_error, to_range_velocity

__all__ = [
    "RidgeLine",
    "chirp_intersections",
    "detect_peaks",
    "detect_single",
    "ghost_removal",
    "region_miss_penalty",
    "ridge_lines",
    "ridge_points",
    "rms_error",
    "to_range_velocity",
]
