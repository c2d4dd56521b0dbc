# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""The delay-Doppler core: grid geometry, signal containers, Zak transform and twisted convolution."""

from .grid import DDGrid
from .signals import DDPatch, DDSignal, TimeSignal
from .twisted import twisted_convolve
from .zak import (
    dd_inner_product,
    inverse_zak,
    quasi_periodic_value,
    quasi_shift,
    zak_transform,
)

__all__ = [
    "DDGrid",
    "DDPatch",
    "DDSignal",
    "TimeSignal",
    "dd_inner_product",
    "inverse_zak",
    "quasi_periodic_value",
    "quasi_shift",
    "twisted_convolve",
    "zak_transform",
]
