# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import numpy as np
import pytest

from ddradar.dd_core import DDGrid, TimeSignal
from ddradar.waveforms import GaussianFilterParams

ALPHA = 1.584
BETA = 1.584


@pytest.fixture
def tiny_grid() -> DDGrid:
    # M = N = 8, 256 samples
    return DDGrid(8e-6, 1e6, 64e-6)


@pytest.fixture
def small_grid() -> DDGrid:
    # B·T = 512, 2048 samples
    return DDGrid(32e-6, 1e6, 512e-6)


@pytest.fixture
def ci_grid() -> DDGrid:
    return DDGrid(50e-6, 1e6, 2e-3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def tiny_filter(tiny_grid) -> GaussianFilterParams:
    return GaussianFilterParams.for_grid(tiny_grid, ALPHA, BETA)


@pytest.fixture
def small_filter(small_grid) -> GaussianFilterParams:
    return GaussianFilterParams.for_grid(small_grid, ALPHA, BETA)


@pytest.fixture
def ci_filter(ci_grid) -> GaussianFilterParams:
    return GaussianFilterParams.for_grid(ci_grid, ALPHA, BETA)


@pytest.fixture
def random_signal(rng):
    """Draw complex white Gaussian signals on a grid's time axis."""

    def draw(grid: DDGrid) -> TimeSignal:
        samples = rng.standard_normal(grid.length) + 1j * rng.standard_normal(grid.length)
        return TimeSignal.on_grid(grid, samples)

    return draw
