# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""A package containing the 'Target' and 'RadarScene' models."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ddradar.config.errors import ConfigurationError, DelayOutOfRangeError
from ddradar.dd_core import DDGrid, DDPatch


@dataclass(frozen=True)
class Target:
    """A point reflector of the delay-Doppler spreading function."""

    h: complex
    """Complex path gain."""

    tau: float
    """Delay in seconds."""

    nu: float
    """Doppler shift in Hz."""

    def __post_init__(self):
        """Validate the target."""
        if self.tau < 0:
            raise DelayOutOfRangeError(self.tau, float("inf"))
        if abs(self.h) == 0:
            msg = f"target at ({self.tau!r} s, {self.nu!r} Hz) has zero gain"
            raise ConfigurationError(msg)

    @classmethod
    def from_dict(
        cls,
        d: dict[str, Any],
        h_re_key: str = "h_re",
        h_im_key: str = "h_im",
        tau_key: str = "tau_s",
        nu_key: str = "nu_hz",
    ) -> Target:
        """Create a target from a scene-file record."""
        return Target(
            h=complex(float(d[h_re_key]), float(d.get(h_im_key, 0.0))),
            tau=float(d[tau_key]),
            nu=float(d[nu_key]),
        )

    def to_dict(self) -> dict[str, float]:
        """Get the scene-file record of the target."""
        return {
            "h_re": self.h.real,
            "h_im": self.h.imag,
            "tau_s": self.tau,
            "nu_hz": self.nu,
        }


@dataclass
class RadarScene:
    """A set of targets, the spreading function Σ h_i δ(τ - τ_i) δ(ν - ν_i)."""

    targets: list[Target] = field(default_factory=list)
    """The targets of the scene."""

    def __len__(self) -> int:
        """Get the number of targets."""
        return len(self.targets)

    def __iter__(self) -> Iterator[Target]:
        """Iterate over the targets."""
        return iter(self.targets)

    @property
    def delay_spread(self) -> float:
        """τ_max - τ_min, zero for an empty scene."""
        if not self.targets:
            return 0.0
        taus = [t.tau for t in self.targets]
        return max(taus) - min(taus)

    @property
    def doppler_spread(self) -> float:
        """ν_max - ν_min, zero for an empty scene."""
        if not self.targets:
            return 0.0
        nus = [t.nu for t in self.targets]
        return max(nus) - min(nus)

    def is_underspread(self) -> bool:
        """Check whether delay spread times Doppler spread is below one."""
        return self.delay_spread * self.doppler_spread < 1.0

    def as_patch(self, grid: DDGrid) -> DDPatch:
        """Get the spreading function as DD impulses snapped to the grid."""
        k = np.array([round(t.tau / grid.dtau) for t in self.targets], dtype=np.int64)
        l = np.array([round(t.nu / grid.dnu) for t in self.targets], dtype=np.int64)  # noqa: E741
        h = np.array([t.h for t in self.targets], dtype=np.complex128)
        return DDPatch.from_taps(grid, k, l, h / grid.cell_area)

    @classmethod
    def from_records(cls, records: list[dict[str, Any]]) -> RadarScene:
        """Create a scene from scene-file records."""
        return RadarScene([Target.from_dict(r) for r in records])

    def to_records(self) -> list[dict[str, float]]:
        """Get the scene-file records."""
        return [t.to_dict() for t in self.targets]
