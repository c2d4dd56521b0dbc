# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Cross- and self-ambiguity surfaces: the time-domain reference, the DD method and closed-form oracles."""

from .dd import cross_ambiguity_dd
from .moyal import coverage, moyal_volume
from .oracles import (
    chirp_delay_integral,
    chirp_patch_self_ambiguity,
    chirp_self_ambiguity_oracle,
    pulsone_self_ambiguity_oracle,
)
from .surface import AmbiguitySurface, SearchRegion
from .td import cross_ambiguity_td

__all__ = [
    "AmbiguitySurface",
    "SearchRegion",
    "chirp_delay_integral",
    "chirp_patch_self_ambiguity",
    "chirp_self_ambiguity_oracle",
    "coverage",
    "cross_ambiguity_dd",
    "cross_ambiguity_td",
    "moyal_volume",
    "pulsone_self_ambiguity_oracle",
]
