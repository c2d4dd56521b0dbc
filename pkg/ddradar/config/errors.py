# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License
"""Errors raised for invalid grids, signals, scenes and configuration files."""


class ConfigurationError(ValueError):
    """Base class for configuration errors."""


class NonIntegerGridError(ConfigurationError):
    """Grid with a non-integer number of delay or Doppler bins."""

    def __init__(self, name: str, value: float) -> None:
        """Init method definition."""
        msg = f"{name} must be a positive integer, got {value!r}. Check B·τ_p and T/τ_p."
        super().__init__(msg)


class SampleRateMismatchError(ConfigurationError):
    """Signal sample rate does not match the grid."""

    def __init__(self, sample_rate: float, expected: float) -> None:
        """Init method definition."""
        msg = f"Signal sample rate {sample_rate!r} Hz does not match the grid rate P·B = {expected!r} Hz."
        super().__init__(msg)


class SignalLengthError(ConfigurationError):
    """Signal length does not cover the grid's time axis."""

    def __init__(self, length: int, expected: int) -> None:
        """Init method definition."""
        msg = f"Signal has {length} samples, the grid's time axis has {expected}."
        super().__init__(msg)


class GridMismatchError(ConfigurationError):
    """Operands sampled on different grids."""

    def __init__(self, operation: str) -> None:
        """Init method definition."""
        msg = f"Operands of {operation} are sampled on different delay-Doppler grids."
        super().__init__(msg)


class AliasingChirpError(ConfigurationError):
    """Chirp whose instantaneous frequency exceeds the Nyquist limit."""

    def __init__(self, max_frequency: float, nyquist: float) -> None:
        """Init method definition."""
        msg = f"Chirp reaches {max_frequency:.6g} Hz inside its window, above the P·B/2 = {nyquist:.6g} Hz limit."
        super().__init__(msg)


class DelayOutOfRangeError(ConfigurationError):
    """Target delay that does not fit in the guard of the time axis."""

    def __init__(self, tau: float, limit: float) -> None:
        """Init method definition."""
        msg = f"Target delay {tau!r} s must lie in [0, {limit!r}) s."
        super().__init__(msg)


class OffGridDelayError(ConfigurationError):
    """Fractional-bin delay with snapping disabled."""

    def __init__(self, tau: float, bin_width: float) -> None:
        """Init method definition."""
        msg = f"Target delay {tau!r} s is not a multiple of the {bin_width!r} s delay bin and snap_to_grid is off."
        super().__init__(msg)


class OutsideFundamentalDomainError(ConfigurationError):
    """Pulsone offset outside [0, τ_p) × [0, ν_p)."""

    def __init__(self, tau_0: float, nu_0: float) -> None:
        """Init method definition."""
        msg = f"Pulsone offset ({tau_0!r} s, {nu_0!r} Hz) is outside the fundamental domain."
        super().__init__(msg)


class InvalidRegionError(ConfigurationError):
    """Search region with inverted or negative bounds."""

    def __init__(self, reason: str) -> None:
        """Init method definition."""
        msg = f"Invalid search region: {reason}"
        super().__init__(msg)


class ConfigFileError(ConfigurationError):
    """Unreadable or missing configuration file."""

    def __init__(self, path: str, reason: str) -> None:
        """Init method definition."""
        msg = f"Cannot read configuration {path}: {reason}"
        super().__init__(msg)
