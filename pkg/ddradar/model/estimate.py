# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""A package containing the estimation result models."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class TargetEstimate:
    """A detected delay-Doppler location with its gain estimate."""

    tau_hat: float
    """Estimated delay in seconds, on the search-region grid."""

    nu_hat: float
    """Estimated Doppler shift in Hz, on the search-region grid."""

    h_hat: complex
    """Gain estimate A(τ̂, ν̂)/E_T."""

    peak_mag: float
    """Surface magnitude the estimate was ranked by."""

    def to_dict(self) -> dict[str, float]:
        """Get the report record."""
        return {
            "tau_s": self.tau_hat,
            "nu_hz": self.nu_hat,
            "h_re": self.h_hat.real,
            "h_im": self.h_hat.imag,
            "peak_mag": self.peak_mag,
        }


@dataclass
class DetectionReport:
    """Detections of one pipeline run, strongest first."""

    estimates: list[TargetEstimate] = field(default_factory=list)
    """The estimates, sorted by descending peak magnitude."""

    ghosts_rejected: int = 0
    """Candidates dropped by ghost removal."""

    crystallized: bool = True
    """Whether the scene satisfied the crystallization condition."""

    def __post_init__(self):
        """Sort the estimates."""
        self.estimates = sorted(self.estimates, key=lambda e: -e.peak_mag)

    def to_dict(self) -> dict[str, Any]:
        """Get the JSON-compatible report."""
        return {
            "estimates": [e.to_dict() for e in self.estimates],
            "ghosts_rejected": self.ghosts_rejected,
            "crystallized": self.crystallized,
        }


@dataclass(frozen=True)
class RmsScore:
    """RMS range and velocity errors of one set of estimates against the truth."""

    range_rmse: float
    """Range RMSE in meters."""

    velocity_rmse: float
    """Velocity RMSE in meters per second."""

    missed: int = 0
    """Truth targets left without a one-to-one estimate."""

    flagged: bool = False
    """Set when the miss-penalty convention was applied."""

    def __iter__(self):
        """Unpack as (range_rmse, velocity_rmse)."""
        return iter((self.range_rmse, self.velocity_rmse))
