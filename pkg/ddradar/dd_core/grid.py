# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""A module containing the 'DDGrid' sampling geometry."""

import math
from dataclasses import dataclass, field

import numpy as np

from ddradar.config.errors import ConfigurationError, NonIntegerGridError

_INTEGER_TOLERANCE = 1e-9


def _as_count(name: str, value: float) -> int:
    count = round(value)
    if count < 1 or not math.isclose(value, count, rel_tol=_INTEGER_TOLERANCE):
        raise NonIntegerGridError(name, value)
    return count


@dataclass(frozen=True)
class DDGrid:
    """Sampling geometry of the delay-Doppler domain.

    The time axis carries Q·P·M·N samples at rate P·B starting at
    t = -ceil(N/2)·τ_p. The first P·M·N samples form the observation window,
    the rest is the guard. Every operation treats the axis as periodic with
    period Q·T.
    """

    tau_p: float
    """Delay period in seconds."""

    bandwidth: float
    """Bandwidth B in Hz."""

    duration: float
    """Duration T in seconds."""

    P: int = 2
    """Delay oversampling factor."""

    Q: int = 2
    """Doppler oversampling factor."""

    M: int = field(init=False)
    """Delay bins per period at rate B, M = B·τ_p."""

    N: int = field(init=False)
    """Doppler bins per period at resolution 1/T, N = T·ν_p."""

    def __post_init__(self):
        """Validate the grid and derive M, N."""
        if self.tau_p <= 0 or self.bandwidth <= 0 or self.duration <= 0:
            msg = "tau_p, bandwidth and duration must be positive"
            raise ConfigurationError(msg)
        if self.P < 1 or self.Q < 1:
            msg = "oversampling factors P and Q must be positive integers"
            raise ConfigurationError(msg)
        object.__setattr__(self, "M", _as_count("M", self.bandwidth * self.tau_p))
        object.__setattr__(self, "N", _as_count("N", self.duration / self.tau_p))

    @property
    def nu_p(self) -> float:
        """Doppler period 1/τ_p."""
        return 1.0 / self.tau_p

    @property
    def bt(self) -> int:
        """Time-bandwidth product, M·N."""
        return self.M * self.N

    @property
    def delay_bins(self) -> int:
        """Number of delay bins P·M in the fundamental domain."""
        return self.P * self.M

    @property
    def doppler_bins(self) -> int:
        """Number of Doppler bins Q·N in the fundamental domain."""
        return self.Q * self.N

    @property
    def shape(self) -> tuple[int, int]:
        """Shape of a DD array on this grid."""
        return (self.delay_bins, self.doppler_bins)

    @property
    def dtau(self) -> float:
        """Delay bin width 1/(P·B)."""
        return 1.0 / (self.P * self.bandwidth)

    @property
    def dnu(self) -> float:
        """Doppler bin width 1/(Q·T)."""
        return 1.0 / (self.Q * self.duration)

    @property
    def cell_area(self) -> float:
        """Area of one DD bin, 1/(P·Q·M·N)."""
        return 1.0 / (self.P * self.Q * self.M * self.N)

    @property
    def sample_rate(self) -> float:
        """Sample rate P·B of time-domain signals."""
        return self.P * self.bandwidth

    @property
    def dt(self) -> float:
        """Sample spacing, equal to the delay bin width."""
        return self.dtau

    @property
    def window_length(self) -> int:
        """Samples in the observation window, P·M·N."""
        return self.P * self.M * self.N

    @property
    def length(self) -> int:
        """Samples on the full cyclic time axis, Q·P·M·N."""
        return self.Q * self.window_length

    @property
    def period(self) -> float:
        """Period Q·T of the cyclic time axis."""
        return self.Q * self.duration

    @property
    def t_start(self) -> float:
        """Time of sample 0."""
        return -math.ceil(self.N / 2) * self.tau_p

    @property
    def delay_resolution(self) -> float:
        """Radar delay resolution 1/B."""
        return 1.0 / self.bandwidth

    @property
    def doppler_resolution(self) -> float:
        """Radar Doppler resolution 1/T."""
        return 1.0 / self.duration

    @property
    def resolvable_target_count(self) -> int:
        """Non-overlapping DD pulses per fundamental domain, B·T."""
        return self.bt

    def time_axis(self) -> np.ndarray:
        """Get the sample times of the cyclic time axis."""
        return self.t_start + np.arange(self.length) * self.dt

    def delay_axis(self) -> np.ndarray:
        """Get the delay of every bin in the fundamental domain."""
        return np.arange(self.delay_bins) * self.dtau

    def doppler_axis(self) -> np.ndarray:
        """Get the Doppler of every bin in the fundamental domain."""
        return np.arange(self.doppler_bins) * self.dnu

    def lattice_point(self, n: int, m: int) -> tuple[float, float]:
        """Get the period lattice point (n·τ_p, m·ν_p)."""
        return (n * self.tau_p, m * self.nu_p)

    def delay_bin(self, tau: float) -> float:
        """Get the (fractional) delay bin index of a delay."""
        return tau / self.dtau

    def doppler_bin(self, nu: float) -> float:
        """Get the (fractional) Doppler bin index of a Doppler shift."""
        return nu / self.dnu
