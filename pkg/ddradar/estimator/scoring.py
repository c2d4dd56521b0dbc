# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Range/velocity conversion and RMS scoring against the true scene."""

import itertools
import logging

import numpy as np
from scipy.optimize import linear_sum_assignment

from ddradar.ambiguity import SearchRegion
from ddradar.config.defaults import SPEED_OF_LIGHT
from ddradar.config.errors import ConfigurationError
from ddradar.model import RadarScene, RmsScore, TargetEstimate

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 6


def to_range_velocity(est: TargetEstimate, carrier_hz: float) -> tuple[float, float]:
    """Get (range m, velocity m/s) = (c·τ̂/2, ν̂·λ/2)."""
    if carrier_hz <= 0:
        msg = f"carrier_hz must be positive, got {carrier_hz!r}"
        raise ConfigurationError(msg)
    return SPEED_OF_LIGHT * est.tau_hat / 2, est.nu_hat * (SPEED_OF_LIGHT / carrier_hz) / 2


def region_miss_penalty(region: SearchRegion, carrier_hz: float) -> tuple[float, float]:
    """Get the largest range and velocity errors inside a search region."""
    return (
        SPEED_OF_LIGHT * (region.tau_max - region.tau_min) / 2,
        (SPEED_OF_LIGHT / carrier_hz) * region.nu_max,
    )


def _assign(cost: np.ndarray) -> list[tuple[int, int]]:
    """Get the (row, col) pairs of a minimum-cost one-to-one assignment."""
    rows, cols = cost.shape
    if min(rows, cols) > EXHAUSTIVE_LIMIT:
        r, c = linear_sum_assignment(cost)
        return list(zip(r.tolist(), c.tolist(), strict=True))
    if rows <= cols:
        best = min(
            itertools.permutations(range(cols), rows),
            key=lambda p: sum(cost[i, j] for i, j in enumerate(p)),
        )
        return list(enumerate(best))
    best = min(
        itertools.permutations(range(rows), cols),
        key=lambda p: sum(cost[i, j] for j, i in enumerate(p)),
    )
    return [(i, j) for j, i in enumerate(best)]


def rms_error(
    estimates: list[TargetEstimate],
    truth: RadarScene,
    carrier_hz: float,
    *,
    bandwidth: float,
    duration: float,
    miss_penalty: tuple[float, float] | None = None,
) -> RmsScore:
    """RMS range and velocity errors over the truth targets.

    Estimates are matched one-to-one with the truth to minimize the summed
    (Δτ·B)² + (Δν·T)². Truth targets left over are scored against their
    nearest estimate. With no estimates at all, the score is `miss_penalty`
    and flagged. It defaults to the region_miss_penalty of the region that
    spans the truth plus one resolution on each axis.
    """
    if len(truth) == 0:
        msg = "rms_error needs at least one truth target"
        raise ConfigurationError(msg)
    if not estimates:
        range_pen, velocity_pen = miss_penalty or region_miss_penalty(
            SearchRegion(
                min(0.0, min(t.tau for t in truth)),
                max(t.tau for t in truth) + 1.0 / bandwidth,
                max(abs(t.nu) for t in truth) + 1.0 / duration,
            ),
            carrier_hz,
        )
        log.debug("no estimates for %d targets", len(truth))
        return RmsScore(range_pen, velocity_pen, missed=len(truth), flagged=True)

    true_tau = np.array([t.tau for t in truth])
    true_nu = np.array([t.nu for t in truth])
    est_tau = np.array([e.tau_hat for e in estimates])
    est_nu = np.array([e.nu_hat for e in estimates])
    cost = np.square((true_tau[:, None] - est_tau[None, :]) * bandwidth) + np.square(
        (true_nu[:, None] - est_nu[None, :]) * duration
    )
    match = dict(_assign(cost))
    missed = len(truth) - len(match)
    for i in range(len(truth)):
        if i not in match:
            match[i] = int(np.argmin(cost[i]))

    d_tau = np.array([true_tau[i] - est_tau[j] for i, j in sorted(match.items())])
    d_nu = np.array([true_nu[i] - est_nu[j] for i, j in sorted(match.items())])
    range_rmse = SPEED_OF_LIGHT / 2 * float(np.sqrt(np.mean(np.square(d_tau))))
    velocity_rmse = (SPEED_OF_LIGHT / carrier_hz) / 2 * float(np.sqrt(np.mean(np.square(d_nu))))
    return RmsScore(range_rmse, velocity_rmse, missed=missed)
