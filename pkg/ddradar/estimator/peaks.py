# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Peak picking on ambiguity surfaces."""

import logging

import numpy as np
from numba import njit

from ddradar.ambiguity import AmbiguitySurface
from ddradar.errors import NoDetectionError
from ddradar.model import TargetEstimate

log = logging.getLogger(__name__)


@njit(cache=True)
def _local_maxima(image, thresh, peakrows, peakcols):
    """
    Find the points no lower than any of their 8 neighbours.

    Border points compare against the neighbours that exist.

    image: 2d array
        A magnitude surface
    thresh: float
        Peaks must be at least this value
    peakrows: array
        an array to fill with peak rows
    peakcols: array
        an array to fill with peak columns
    """
    npeaks = 0
    nrows, ncols = image.shape
    for irow in range(nrows):
        rowstart = max(irow - 1, 0)
        rowend = min(irow + 1, nrows - 1)
        for icol in range(ncols):
            val = image[irow, icol]
            if val < thresh or val <= 0.0:
                continue
            colstart = max(icol - 1, 0)
            colend = min(icol + 1, ncols - 1)
            ispeak = True
            for checkrow in range(rowstart, rowend + 1):
                for checkcol in range(colstart, colend + 1):
                    if checkrow == irow and checkcol == icol:
                        continue
                    if image[checkrow, checkcol] > val:
                        ispeak = False
                        break
                if not ispeak:
                    break
            if ispeak:
                peakrows[npeaks] = irow
                peakcols[npeaks] = icol
                npeaks += 1
    return npeaks


def _estimate(surface: AmbiguitySurface, i: int, j: int) -> TargetEstimate:
    value = complex(surface.values[i, j])
    h_hat = value / surface.sounding_energy if surface.sounding_energy else 0j
    return TargetEstimate(
        tau_hat=float(surface.k[i] * surface.dtau),
        nu_hat=float(surface.l[j] * surface.dnu),
        h_hat=h_hat,
        peak_mag=abs(value),
    )


def detect_single(surface: AmbiguitySurface) -> TargetEstimate:
    """Grid argmax of |A|; ties go to the smallest delay, then the smallest |Doppler|."""
    mag = surface.magnitude
    peak = mag.max(initial=0.0)
    if peak == 0:
        raise NoDetectionError
    rows, cols = np.nonzero(np.isclose(mag, peak, rtol=1e-12, atol=0.0))
    order = np.lexsort((np.abs(surface.l[cols]), surface.k[rows]))
    return _estimate(surface, int(rows[order[0]]), int(cols[order[0]]))


def detect_peaks(
    surface: AmbiguitySurface,
    max_count: int,
    rel_threshold: float = 0.5,
    exclusion: tuple[float, float] | None = None,
) -> list[TargetEstimate]:
    """Pick local maxima above rel_threshold·max, strongest first, with an exclusion zone.

    A candidate is dropped when it lies strictly inside `exclusion` =
    (delay, Doppler) of an accepted peak on both axes, so peaks one full
    resolution apart stay separate. The default is two bins each way,
    one resolution at P = Q = 2.
    """
    if not 0 < rel_threshold < 1:
        msg = f"rel_threshold must lie in (0, 1), got {rel_threshold!r}"
        raise ValueError(msg)
    tau_excl, nu_excl = exclusion or (2 * surface.dtau, 2 * surface.dnu)
    mag = np.ascontiguousarray(surface.magnitude)
    peak = mag.max(initial=0.0)
    if peak == 0 or max_count < 1:
        return []
    rows = np.zeros(mag.size, dtype=np.int64)
    cols = np.zeros(mag.size, dtype=np.int64)
    npeaks = _local_maxima(mag, rel_threshold * peak, rows, cols)
    rows, cols = rows[:npeaks], cols[:npeaks]
    order = np.argsort(-mag[rows, cols], kind="stable")
    accepted: list[TargetEstimate] = []
    eps = 1e-9 * surface.dtau
    for idx in order:
        candidate = _estimate(surface, int(rows[idx]), int(cols[idx]))
        if any(
            abs(candidate.tau_hat - a.tau_hat) < tau_excl - eps
            and abs(candidate.nu_hat - a.nu_hat) < nu_excl - eps * surface.dnu / surface.dtau
            for a in accepted
        ):
            continue
        accepted.append(candidate)
        if len(accepted) == max_count:
            break
    log.debug("%d local maxima, %d peaks accepted", npeaks, len(accepted))
    return accepted
