# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""A module containing the time-domain and delay-Doppler signal containers."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ddradar.config.errors import (
    GridMismatchError,
    SampleRateMismatchError,
    SignalLengthError,
)

from .grid import DDGrid


@dataclass(frozen=True, eq=False)
class TimeSignal:
    """Complex baseband samples on a uniform time axis."""

    samples: np.ndarray
    """Complex samples."""

    sample_rate: float
    """Sample rate in Hz."""

    t_start: float
    """Time of sample 0 in seconds."""

    @classmethod
    def on_grid(cls, grid: DDGrid, samples: np.ndarray) -> TimeSignal:
        """Wrap samples that cover the grid's cyclic time axis."""
        samples = np.asarray(samples, dtype=np.complex128)
        if samples.shape != (grid.length,):
            raise SignalLengthError(samples.size, grid.length)
        return cls(samples, grid.sample_rate, grid.t_start)

    @classmethod
    def zeros(cls, grid: DDGrid) -> TimeSignal:
        """Create an all-zero signal on the grid's time axis."""
        return cls.on_grid(grid, np.zeros(grid.length, dtype=np.complex128))

    @property
    def dt(self) -> float:
        """Sample spacing."""
        return 1.0 / self.sample_rate

    @property
    def times(self) -> np.ndarray:
        """Sample times."""
        return self.t_start + np.arange(self.samples.size) * self.dt

    @property
    def energy(self) -> float:
        """Signal energy, sum |x|² / sample_rate."""
        return float(np.vdot(self.samples, self.samples).real) * self.dt

    def energy_between(self, t0: float, t1: float) -> float:
        """Energy of the samples with t0 <= t < t1."""
        t = self.times
        mask = (t >= t0 - 0.5 * self.dt) & (t < t1 - 0.5 * self.dt)
        s = self.samples[mask]
        return float(np.vdot(s, s).real) * self.dt

    def inner(self, other: TimeSignal) -> complex:
        """Time-domain inner product <self, other>."""
        self.check_compatible(other, "time-domain inner product")
        return complex(np.vdot(other.samples, self.samples)) * self.dt

    def check_compatible(self, other: TimeSignal, operation: str) -> None:
        """Raise if two signals do not share a time axis."""
        if not math.isclose(self.sample_rate, other.sample_rate, rel_tol=1e-12):
            raise SampleRateMismatchError(other.sample_rate, self.sample_rate)
        if self.samples.size != other.samples.size:
            raise SignalLengthError(other.samples.size, self.samples.size)
        if not math.isclose(self.t_start, other.t_start, abs_tol=0.5 * self.dt):
            raise GridMismatchError(operation)

    def check_grid(self, grid: DDGrid, operation: str) -> None:
        """Raise if the signal is not sampled on the grid's time axis."""
        if not math.isclose(self.sample_rate, grid.sample_rate, rel_tol=1e-12):
            raise SampleRateMismatchError(self.sample_rate, grid.sample_rate)
        if self.samples.size != grid.length:
            raise SignalLengthError(self.samples.size, grid.length)
        if not math.isclose(self.t_start, grid.t_start, abs_tol=0.5 * grid.dt):
            raise GridMismatchError(operation)

    def scaled(self, factor: complex) -> TimeSignal:
        """Multiply every sample by a constant."""
        return TimeSignal(self.samples * factor, self.sample_rate, self.t_start)

    def __add__(self, other: TimeSignal) -> TimeSignal:
        """Sample-wise sum."""
        self.check_compatible(other, "signal addition")
        return TimeSignal(self.samples + other.samples, self.sample_rate, self.t_start)


@dataclass(frozen=True, eq=False)
class DDSignal:
    """Quasi-periodic delay-Doppler samples on the fundamental domain.

    `values[k, l]` is the sample at delay k/(P·B) and Doppler l/(Q·T) for
    0 <= k < P·M and 0 <= l < Q·N.
    """

    grid: DDGrid
    """The sampling grid."""

    values: np.ndarray
    """Complex samples, shape (P·M, Q·N)."""

    def __post_init__(self):
        """Validate the array shape."""
        if self.values.shape != self.grid.shape:
            msg = f"DD array of shape {self.values.shape} on a grid of shape {self.grid.shape}"
            raise GridMismatchError(msg)

    @classmethod
    def zeros(cls, grid: DDGrid) -> DDSignal:
        """Create an all-zero DD signal."""
        return cls(grid, np.zeros(grid.shape, dtype=np.complex128))

    @classmethod
    def impulse(
        cls, grid: DDGrid, k: int, l: int, amplitude: complex = 1.0  # noqa: E741
    ) -> DDSignal:
        """Create a quasi-periodic Dirac at bin (k, l) scaled by `amplitude`.

        The stored peak is amplitude/(cell area).
        """
        values = np.zeros(grid.shape, dtype=np.complex128)
        values[k % grid.delay_bins, l % grid.doppler_bins] = amplitude / grid.cell_area
        return cls(grid, values)

    @property
    def energy(self) -> float:
        """Riemann sum of |x_dd|² over the fundamental domain."""
        return float(np.vdot(self.values, self.values).real) * self.grid.cell_area

    def scaled(self, factor: complex) -> DDSignal:
        """Multiply every sample by a constant."""
        return DDSignal(self.grid, self.values * factor)

    def __add__(self, other: DDSignal) -> DDSignal:
        """Bin-wise sum."""
        if other.grid != self.grid:
            raise GridMismatchError("DD signal addition")
        return DDSignal(self.grid, self.values + other.values)


@dataclass(frozen=True, eq=False)
class DDPatch:
    """An aperiodic sampled DD function on a finite block of bins.

    `values[i, j]` is the sample at delay bin `k_start + i` and Doppler bin
    `l_start + j`; bins outside the block are zero. Filter taps, scene
    spreading functions and ambiguity patches are represented this way.
    """

    grid: DDGrid
    """The grid whose bin widths the patch is sampled with."""

    values: np.ndarray
    """Complex samples."""

    k_start: int
    """Delay bin of `values[0, :]`."""

    l_start: int
    """Doppler bin of `values[:, 0]`."""

    @classmethod
    def impulse(
        cls, grid: DDGrid, k: int, l: int, amplitude: complex = 1.0  # noqa: E741
    ) -> DDPatch:
        """Create a single-bin Dirac at (k, l) with stored value amplitude/(cell area)."""
        values = np.full((1, 1), amplitude / grid.cell_area, dtype=np.complex128)
        return cls(grid, values, int(k), int(l))

    @classmethod
    def from_taps(
        cls,
        grid: DDGrid,
        k: np.ndarray,
        l: np.ndarray,  # noqa: E741
        v: np.ndarray,
    ) -> DDPatch:
        """Build the smallest patch holding the given (k, l, value) taps; repeated bins add up."""
        k = np.asarray(k, dtype=np.int64)
        l = np.asarray(l, dtype=np.int64)  # noqa: E741
        if k.size == 0:
            return cls(grid, np.zeros((1, 1), dtype=np.complex128), 0, 0)
        k0, l0 = int(k.min()), int(l.min())
        values = np.zeros((int(k.max()) - k0 + 1, int(l.max()) - l0 + 1), dtype=np.complex128)
        np.add.at(values, (k - k0, l - l0), np.asarray(v, dtype=np.complex128))
        return cls(grid, values, k0, l0)

    @property
    def k_stop(self) -> int:
        """One past the last delay bin."""
        return self.k_start + self.values.shape[0]

    @property
    def l_stop(self) -> int:
        """One past the last Doppler bin."""
        return self.l_start + self.values.shape[1]

    def delay_bins(self) -> np.ndarray:
        """Get the delay bin indices of the rows."""
        return np.arange(self.k_start, self.k_stop)

    def doppler_bins(self) -> np.ndarray:
        """Get the Doppler bin indices of the columns."""
        return np.arange(self.l_start, self.l_stop)

    def value_at(self, k: int, l: int) -> complex:  # noqa: E741
        """Get the sample at an absolute bin, zero outside the block."""
        if self.k_start <= k < self.k_stop and self.l_start <= l < self.l_stop:
            return complex(self.values[k - self.k_start, l - self.l_start])
        return 0j

    def taps(self, rel_threshold: float = 0.0) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Get (k, l, value) of the taps with |value| > rel_threshold·peak."""
        mag = np.abs(self.values)
        peak = mag.max(initial=0.0)
        i, j = np.nonzero((mag > rel_threshold * peak) & (mag > 0))
        return i + self.k_start, j + self.l_start, self.values[i, j]

    def scaled(self, factor: complex) -> DDPatch:
        """Multiply every sample by a constant."""
        return DDPatch(self.grid, self.values * factor, self.k_start, self.l_start)

    def __add__(self, other: DDPatch) -> DDPatch:
        """Bin-wise sum over the union of both blocks."""
        if other.grid != self.grid:
            raise GridMismatchError("DD patch addition")
        k0 = min(self.k_start, other.k_start)
        l0 = min(self.l_start, other.l_start)
        k1 = max(self.k_stop, other.k_stop)
        l1 = max(self.l_stop, other.l_stop)
        values = np.zeros((k1 - k0, l1 - l0), dtype=np.complex128)
        for p in (self, other):
            values[
                p.k_start - k0 : p.k_stop - k0, p.l_start - l0 : p.l_stop - l0
            ] += p.values
        return DDPatch(self.grid, values, k0, l0)
