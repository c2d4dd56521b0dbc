# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""A module containing the configuration enums."""

from __future__ import annotations

from enum import Enum


class Profile(str, Enum):
    """The scale profile used to resolve defaults."""

    ci = "ci"
    """Desk-scale grid: B = 1 MHz, T = 2 ms, τ_p = 50 μs."""
    paper = "paper"
    """Full-scale grid: B = 4 MHz, T = 20 ms, τ_p = 100 μs. `full` is accepted as an alias."""

    @classmethod
    def _missing_(cls, value: object) -> "Profile | None":
        if value == "full":
            return cls.paper
        return None

    def __repr__(self):
        """Get a string representation."""
        return f'"{self.value}"'


class Waveform(str, Enum):
    """The sounding waveform family."""

    zak_otfs = "zak_otfs"
    """A single filtered pulsone over the whole duration T."""
    chirp_single_pair = "chirp_single_pair"
    """An up-chirp then a down-chirp, T/2 each, slopes ±2B/T."""
    chirp_two_pairs = "chirp_two_pairs"
    """Two up/down pairs, T/4 each, slopes ±2B/T then ±4B/T."""

    def __repr__(self):
        """Get a string representation."""
        return f'"{self.value}"'


class GainLaw(str, Enum):
    """The law used to draw target gain magnitudes."""

    inverse_delay = "inverse_delay"
    """|h| = scale / τ."""
    unit = "unit"
    """|h| = 1."""

    def __repr__(self):
        """Get a string representation."""
        return f'"{self.value}"'


class ReporterType(str, Enum):
    """The progress reporter type."""

    rich = "rich"
    """Rich live tree with progress bars."""
    print = "print"
    """Plain print statements."""
    none = "none"
    """No progress output."""

    def __repr__(self):
        """Get a string representation."""
        return f'"{self.value}"'


class TableEmitterType(str, Enum):
    """Table emitter types."""

    csv = "csv"
    """Comma separated values."""
    json = "json"
    """JSON records."""

    def __repr__(self):
        """Get a string representation."""
        return f'"{self.value}"'
