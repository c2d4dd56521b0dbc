# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import numpy as np
import pytest

from ddradar.experiments import bench_grid, fit_loglog_slope


@pytest.mark.parametrize(("exponent", "m", "n"), [(10, 32, 32), (11, 64, 32), (14, 128, 128)])
def test_bench_grids(exponent, m, n):
    grid = bench_grid(exponent, 1e6)
    assert (grid.M, grid.N) == (m, n)
    assert grid.bt == 2**exponent


def test_loglog_slope():
    bt = np.array([2.0**k for k in range(10, 15)])
    assert fit_loglog_slope(bt, 3e-9 * bt**1.5) == pytest.approx(1.5)
    assert fit_loglog_slope(list(bt), list(0.2 * bt)) == pytest.approx(1.0)
