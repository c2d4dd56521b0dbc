# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Numerical errors raised by the radar engine."""


class NumericalError(RuntimeError):
    """Base class for numerical failures."""


class QuadratureError(NumericalError):
    """Quadrature did not reach the requested tolerance."""

    def __init__(self, tau: float, nu: float, abserr: float, tolerance: float) -> None:
        """Init method definition."""
        self.tau = tau
        self.nu = nu
        self.abserr = abserr
        self.tolerance = tolerance
        msg = f"Quadrature at (τ={tau!r} s, ν={nu!r} Hz) stopped with error estimate {abserr:.3g} > {tolerance:.3g}."
        super().__init__(msg)


class NoDetectionError(NumericalError):
    """Surface without any nonzero value."""

    def __init__(self) -> None:
        """Init method definition."""
        super().__init__("Ambiguity surface is identically zero; no target can be detected.")
