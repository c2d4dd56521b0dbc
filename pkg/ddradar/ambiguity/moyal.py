# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Ambiguity volume."""

import logging

import numpy as np

from .surface import AmbiguitySurface

log = logging.getLogger(__name__)

MIN_COVERAGE = 0.99


def coverage(surface: AmbiguitySurface) -> float:
    """Share of |A|² mass away from the outermost rows and columns.

    A value well below one means the region cuts through the ambiguity mass.
    """
    mass = np.square(surface.magnitude)
    total = mass.sum()
    if total == 0:
        return 1.0
    inner = mass[1:-1, 1:-1].sum() if min(mass.shape) > 2 else 0.0
    return float(inner / total)


def moyal_volume(surface: AmbiguitySurface) -> float:
    """Riemann sum of |A|²·dτ·dν over the surface."""
    share = coverage(surface)
    if share < MIN_COVERAGE:
        log.warning(
            "ambiguity region holds only %.4f of its mass away from the edges; volume is a lower bound",
            share,
        )
    return float(np.square(surface.magnitude).sum()) * surface.dtau * surface.dnu
