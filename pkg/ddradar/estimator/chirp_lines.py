# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Chirp-pair estimation: ridge lines on the up and down surfaces and their intersections."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np
from scipy.signal import find_peaks

from ddradar.ambiguity import AmbiguitySurface
from ddradar.model import TargetEstimate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RidgeLine:
    """A straight band ν = c + a·τ found on a chirp cross-ambiguity surface."""

    slope: float
    """Chirp slope a in Hz²."""

    intercept: float
    """Doppler intercept c in Hz."""

    weight: float
    """Sum of squared magnitudes of the ridge points."""

    points: int
    """Number of ridge points."""

    def intersect(self, other: RidgeLine) -> tuple[float, float] | None:
        """Get the (τ, ν) where two lines cross, or None when parallel."""
        da = other.slope - self.slope
        if da == 0:
            return None
        tau = (self.intercept - other.intercept) / da
        return tau, self.intercept + self.slope * tau


def ridge_points(
    surface: AmbiguitySurface, rel_threshold: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Get the per-Doppler-column maxima over delay as (τ, ν, |A|) arrays."""
    mag = surface.magnitude
    height = rel_threshold * surface.peak
    taus, nus, mags = [], [], []
    for j in range(mag.shape[1]):
        rows, _ = find_peaks(mag[:, j], height=height)
        taus.extend(surface.taus[rows])
        nus.extend([surface.nus[j]] * len(rows))
        mags.extend(mag[rows, j])
    return np.asarray(taus, dtype=float), np.asarray(nus, dtype=float), np.asarray(mags, dtype=float)


def ridge_lines(
    surface: AmbiguitySurface,
    slope: float,
    max_count: int,
    rel_threshold: float = 0.5,
    min_points: int = 3,
    segment_duration: float | None = None,
) -> list[RidgeLine]:
    """Fit lines of known slope through the ridge points of a chirp surface.

    Ridge points are grouped by their intercept c = ν - a·τ; groups split
    where consecutive intercepts differ by more than 1/segment_duration,
    or four Doppler bins when it is not given.
    Each group with at least `min_points` points yields one line at the
    magnitude²-weighted mean intercept. The `max_count` heaviest lines are kept.
    """
    taus, nus, mags = ridge_points(surface, rel_threshold)
    if taus.size == 0:
        return []
    gap = 1.0 / segment_duration if segment_duration else 4 * surface.dnu
    intercepts = nus - slope * taus
    order = np.argsort(intercepts, kind="stable")
    intercepts, weights = intercepts[order], np.square(mags[order])
    splits = np.flatnonzero(np.diff(intercepts) > gap) + 1
    lines = [
        RidgeLine(slope, float(np.average(c, weights=w)), float(w.sum()), c.size)
        for c, w in zip(np.split(intercepts, splits), np.split(weights, splits), strict=True)
        if c.size >= min_points
    ]
    lines.sort(key=lambda line: -line.weight)
    log.debug("slope %g: %d ridge points, %d lines", slope, taus.size, len(lines))
    return lines[:max_count]


def chirp_intersections(
    up: AmbiguitySurface,
    down: AmbiguitySurface,
    slopes: tuple[float, float],
    max_count: int,
    rel_threshold: float = 0.5,
    min_points: int = 3,
    segment_duration: float | None = None,
) -> list[TargetEstimate]:
    """Estimate targets as intersections of up-chirp and down-chirp ridge lines.

    Every up line is crossed with every down line; crossings outside the
    search region are dropped and the rest are snapped to the surface grid.
    Candidates are ranked by sqrt(|A_up|·|A_down|) at the snapped point.
    """
    up_lines = ridge_lines(up, slopes[0], max_count, rel_threshold, min_points, segment_duration)
    down_lines = ridge_lines(down, slopes[1], max_count, rel_threshold, min_points, segment_duration)
    estimates: dict[tuple[int, int], TargetEstimate] = {}
    for u, d in itertools.product(up_lines, down_lines):
        crossing = u.intersect(d)
        if crossing is None or not up.region.contains(*crossing, up.dtau, up.dnu):
            continue
        k, l = round(crossing[0] / up.dtau), round(crossing[1] / up.dnu)  # noqa: E741
        tau_hat, nu_hat = k * up.dtau, l * up.dnu
        a_up = up.value_at(tau_hat, nu_hat)
        a_down = down.value_at(tau_hat, nu_hat)
        candidate = TargetEstimate(
            tau_hat=tau_hat,
            nu_hat=nu_hat,
            h_hat=a_up / up.sounding_energy if up.sounding_energy else 0j,
            peak_mag=float(np.sqrt(abs(a_up) * abs(a_down))),
        )
        if (k, l) not in estimates or candidate.peak_mag > estimates[k, l].peak_mag:
            estimates[k, l] = candidate
    return sorted(estimates.values(), key=lambda e: -e.peak_mag)


def ghost_removal(
    pair1: list[TargetEstimate],
    pair2: list[TargetEstimate],
    match_tol: tuple[float, float],
) -> list[TargetEstimate]:
    """Keep the estimates of the first pair matched by the second pair.

    A match lies within `match_tol` = (delay, Doppler) on both axes.
    """
    tau_tol, nu_tol = match_tol
    return [
        e
        for e in pair1
        if any(
            abs(e.tau_hat - g.tau_hat) <= tau_tol and abs(e.nu_hat - g.nu_hat) <= nu_tol
            for g in pair2
        )
    ]
