# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""A module containing the 'SearchRegion' and 'AmbiguitySurface' types."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ddradar.config.errors import InvalidRegionError

_EDGE = 1e-9


@dataclass(frozen=True)
class SearchRegion:
    """Delay window [tau_min, tau_max] times the Doppler window [-nu_max, nu_max]."""

    tau_min: float
    """Smallest delay in seconds; may be negative."""

    tau_max: float
    """Largest delay in seconds."""

    nu_max: float
    """Doppler half-width in Hz."""

    def __post_init__(self):
        """Validate the region."""
        if self.tau_max < self.tau_min:
            raise InvalidRegionError(f"tau_max {self.tau_max!r} < tau_min {self.tau_min!r}")
        if self.nu_max < 0:
            raise InvalidRegionError(f"nu_max {self.nu_max!r} is negative")

    @property
    def is_unambiguous(self) -> bool:
        """Check 2·(tau_max - tau_min)·nu_max < 1."""
        return 2 * (self.tau_max - self.tau_min) * self.nu_max < 1.0

    def bins(
        self,
        dtau: float,
        dnu: float,
        period_bins: tuple[int, int] | None = None,
    ) -> tuple[np.ndarray, np.ndarray]:
        """Get the delay and Doppler bin indices covering the region.

        Bounds are snapped outward to the bin lattice. `period_bins` caps the
        number of bins per axis at one period of a cyclic axis.
        """
        k0 = math.floor(self.tau_min / dtau + _EDGE)
        k1 = math.ceil(self.tau_max / dtau - _EDGE)
        lmax = math.ceil(self.nu_max / dnu - _EDGE)
        k = np.arange(k0, k1 + 1)
        l = np.arange(-lmax, lmax + 1)  # noqa: E741
        if period_bins is not None and (k.size > period_bins[0] or l.size > period_bins[1]):
            msg = f"{k.size}×{l.size} bins exceed one period of {period_bins[0]}×{period_bins[1]}"
            raise InvalidRegionError(msg)
        return k, l

    def contains(self, tau: float, nu: float, dtau: float = 0.0, dnu: float = 0.0) -> bool:
        """Check membership, widened by half a bin on each side."""
        return (
            self.tau_min - dtau / 2 <= tau <= self.tau_max + dtau / 2
            and abs(nu) <= self.nu_max + dnu / 2
        )

    @classmethod
    def around(
        cls, taus: list[float], nus: list[float], tau_margin: float, nu_margin: float
    ) -> SearchRegion:
        """Build the smallest region holding the points plus margins, delays clipped at zero."""
        return cls(
            max(0.0, min(taus) - tau_margin),
            max(taus) + tau_margin,
            max(abs(n) for n in nus) + nu_margin,
        )


@dataclass(frozen=True, eq=False)
class AmbiguitySurface:
    """Complex cross-ambiguity values on the bins of a search region."""

    region: SearchRegion
    """The region the surface was evaluated on."""

    k: np.ndarray
    """Delay bin indices of the rows."""

    l: np.ndarray  # noqa: E741
    """Doppler bin indices of the columns."""

    dtau: float
    """Delay bin width 1/(P·B)."""

    dnu: float
    """Doppler bin width 1/(Q·T)."""

    values: np.ndarray
    """Complex values, shape (len(k), len(l))."""

    sounding_energy: float
    """Energy E_T of the sounding."""

    @property
    def taus(self) -> np.ndarray:
        """Delay of every row."""
        return self.k * self.dtau

    @property
    def nus(self) -> np.ndarray:
        """Doppler of every column."""
        return self.l * self.dnu

    @property
    def magnitude(self) -> np.ndarray:
        """|values|."""
        return np.abs(self.values)

    @property
    def peak(self) -> float:
        """Largest magnitude."""
        return float(self.magnitude.max(initial=0.0))

    def index_of(self, tau: float, nu: float) -> tuple[int, int]:
        """Get the (row, column) of the bin nearest to (tau, nu)."""
        i = int(np.clip(round(tau / self.dtau) - self.k[0], 0, self.k.size - 1))
        j = int(np.clip(round(nu / self.dnu) - self.l[0], 0, self.l.size - 1))
        return i, j

    def value_at(self, tau: float, nu: float) -> complex:
        """Get the value of the bin nearest to (tau, nu)."""
        return complex(self.values[self.index_of(tau, nu)])

    def scaled(self, factor: complex) -> AmbiguitySurface:
        """Multiply every value by a constant."""
        return AmbiguitySurface(
            self.region,
            self.k,
            self.l,
            self.dtau,
            self.dnu,
            self.values * factor,
            self.sounding_energy,
        )

    def to_frame(self) -> pd.DataFrame:
        """Flatten to rows of tau_s, nu_hz, re, im, abs in delay-major order."""
        tau, nu = np.meshgrid(self.taus, self.nus, indexing="ij")
        v = self.values
        return pd.DataFrame({
            "tau_s": tau.ravel(),
            "nu_hz": nu.ravel(),
            "re": v.real.ravel(),
            "im": v.imag.ravel(),
            "abs": np.abs(v).ravel(),
        })
