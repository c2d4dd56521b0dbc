# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Apply a multi-target delay-Doppler channel to a sounding."""

import logging
import math

import numpy as np

from ddradar.config.errors import DelayOutOfRangeError, OffGridDelayError
from ddradar.dd_core import DDGrid, TimeSignal
from ddradar.model import RadarScene

log = logging.getLogger(__name__)

_ON_GRID_TOLERANCE = 1e-6


def snap_delay(tau: float, grid: DDGrid, snap_to_grid: bool = True) -> tuple[int, float]:
    """Get the delay bin of `tau` and the residual τ - k/(P·B).

    Raises when the delay leaves the guard of the time axis, or when it is
    fractional and snapping is off.
    """
    limit = (grid.Q - 1) * grid.duration
    if tau < 0 or tau >= limit:
        raise DelayOutOfRangeError(tau, limit)
    exact = tau / grid.dtau
    k = round(exact)
    if not snap_to_grid and not math.isclose(exact, k, abs_tol=_ON_GRID_TOLERANCE):
        raise OffGridDelayError(tau, grid.dtau)
    return k, tau - k * grid.dtau


def apply_scene(
    scene: RadarScene, x: TimeSignal, grid: DDGrid, snap_to_grid: bool = True
) -> TimeSignal:
    """Compute y(t) = Σ h_i·e^{j2πν_i(t - τ_i)}·x(t - τ_i) on the cyclic time axis.

    Delays are applied as whole-sample shifts; Doppler as an exact phase ramp.
    """
    x.check_grid(grid, "apply_scene")
    t = grid.time_axis()
    y = np.zeros(grid.length, dtype=np.complex128)
    for target in scene:
        k, residual = snap_delay(target.tau, grid, snap_to_grid)
        if residual:
            log.debug("delay %g s snapped to bin %d (residual %g s)", target.tau, k, residual)
        shifted = np.roll(x.samples, k)
        y += target.h * np.exp(2j * np.pi * target.nu * (t - target.tau)) * shifted
    return TimeSignal.on_grid(grid, y)


def delay_residuals(scene: RadarScene, grid: DDGrid) -> list[float]:
    """Get the snapping residual of every target delay."""
    return [snap_delay(t.tau, grid)[1] for t in scene]


def crystallization_check(scene: RadarScene, grid: DDGrid) -> bool:
    """Check delay spread < τ_p and Doppler spread < ν_p."""
    return scene.delay_spread < grid.tau_p and scene.doppler_spread < grid.nu_p
