# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""A module containing the waveform parameter types."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from ddradar.config.errors import ConfigurationError
from ddradar.dd_core import DDGrid


@dataclass(frozen=True)
class GaussianFilterParams:
    """Separable Gaussian pulse-shaping filter w(τ, ν) = w₁(τ)·w₂(ν)."""

    alpha: float
    """Delay-axis Gaussian parameter."""

    beta: float
    """Doppler-axis Gaussian parameter."""

    bandwidth: float
    """Bandwidth B in Hz, the delay spread is about 1/B."""

    duration: float
    """Duration T in seconds, the Doppler spread is about 1/T."""

    def __post_init__(self):
        """Validate the parameters."""
        if self.alpha <= 0 or self.beta <= 0:
            msg = f"filter parameters must be positive, got α={self.alpha!r}, β={self.beta!r}"
            raise ConfigurationError(msg)
        if self.bandwidth <= 0 or self.duration <= 0:
            msg = "filter bandwidth and duration must be positive"
            raise ConfigurationError(msg)

    @classmethod
    def for_grid(cls, grid: DDGrid, alpha: float, beta: float) -> GaussianFilterParams:
        """Create the filter matched to a grid's bandwidth and duration."""
        return cls(alpha, beta, grid.bandwidth, grid.duration)

    def with_duration(self, duration: float) -> GaussianFilterParams:
        """Get the same filter limited to another duration."""
        return replace(self, duration=duration)


@dataclass(frozen=True)
class ChirpParams:
    """A linear chirp segment."""

    slope: float
    """Chirp slope a in Hz²; positive for up-chirps."""

    duration: float
    """Segment duration in seconds."""

    start: float
    """Segment start time in seconds."""

    def __post_init__(self):
        """Validate the segment."""
        if self.duration <= 0:
            msg = f"chirp duration must be positive, got {self.duration!r}"
            raise ConfigurationError(msg)

    @property
    def center(self) -> float:
        """Segment center time."""
        return self.start + 0.5 * self.duration

    @property
    def stop(self) -> float:
        """Segment end time."""
        return self.start + self.duration


@dataclass(frozen=True)
class ChirpSchedule:
    """Contiguous chirp segments partitioning the sounding duration."""

    segments: tuple[ChirpParams, ...] = field(default_factory=tuple)
    """The ordered segments."""

    def __post_init__(self):
        """Validate the schedule."""
        if len(self.segments) not in (1, 2, 4):
            msg = f"a chirp schedule has 1, 2 or 4 segments, got {len(self.segments)}"
            raise ConfigurationError(msg)
        for prev, cur in zip(self.segments, self.segments[1:], strict=False):
            if not math.isclose(prev.stop, cur.start, rel_tol=1e-9, abs_tol=1e-15):
                msg = f"chirp segments must be contiguous, {prev.stop!r} != {cur.start!r}"
                raise ConfigurationError(msg)

    def __len__(self) -> int:
        """Get the number of segments."""
        return len(self.segments)

    @property
    def slopes(self) -> list[float]:
        """Get the segment slopes in order."""
        return [s.slope for s in self.segments]

    def pairs(self) -> list[tuple[int, int]]:
        """Get the (up, down) segment indices of each consecutive pair."""
        return [(i, i + 1) for i in range(0, len(self.segments) - 1, 2)]


@dataclass(frozen=True)
class PulsoneParams:
    """A pulsone located at (τ₀, ν₀) in the fundamental domain."""

    tau_0: float
    """Delay offset in [0, τ_p)."""

    nu_0: float
    """Doppler offset in [0, ν_p)."""

    filter: GaussianFilterParams
    """The pulse-shaping filter."""
