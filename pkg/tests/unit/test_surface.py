# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import numpy as np
import pytest

from ddradar.ambiguity import AmbiguitySurface, SearchRegion, coverage
from ddradar.config import InvalidRegionError


def test_region_validation():
    with pytest.raises(InvalidRegionError):
        SearchRegion(2e-6, 1e-6, 100.0)
    with pytest.raises(InvalidRegionError):
        SearchRegion(0.0, 1e-6, -1.0)


def test_bins_snap_outward():
    region = SearchRegion(0.3, 2.2, 1.5)
    k, l = region.bins(1.0, 1.0)  # noqa: E741
    assert k.tolist() == [0, 1, 2, 3]
    assert l.tolist() == [-2, -1, 0, 1, 2]


def test_bins_on_the_lattice_are_exact():
    dtau = 1.25e-7
    region = SearchRegion(-6 * dtau, 8 * dtau, 3 * 50.0)
    k, l = region.bins(dtau, 50.0)  # noqa: E741
    assert (k[0], k[-1]) == (-6, 8)
    assert (l[0], l[-1]) == (-3, 3)


def test_bins_capped_at_one_period():
    with pytest.raises(InvalidRegionError):
        SearchRegion(0.0, 10.0, 1.0).bins(1.0, 1.0, period_bins=(8, 8))


def test_unambiguous():
    assert SearchRegion(0.0, 1e-6, 100.0).is_unambiguous
    assert not SearchRegion(0.0, 1e-3, 1e3).is_unambiguous


def test_contains_is_widened_by_half_a_bin():
    region = SearchRegion(1.0, 2.0, 3.0)
    assert region.contains(0.6, 0.0, dtau=1.0)
    assert not region.contains(0.4, 0.0, dtau=1.0)
    assert region.contains(1.5, -3.4, dnu=1.0)
    assert not region.contains(1.5, 3.6, dnu=1.0)


def test_around_clips_delay_at_zero():
    region = SearchRegion.around([1e-6, 3e-6], [-200.0, 50.0], 2e-6, 100.0)
    assert region.tau_min == 0.0
    assert region.tau_max == pytest.approx(5e-6)
    assert region.nu_max == pytest.approx(300.0)


def _surface(values):
    values = np.asarray(values, dtype=complex)
    k = np.arange(values.shape[0])
    l = np.arange(values.shape[1]) - values.shape[1] // 2  # noqa: E741
    region = SearchRegion(0.0, (values.shape[0] - 1) * 0.5, (values.shape[1] // 2) * 2.0)
    return AmbiguitySurface(region, k, l, 0.5, 2.0, values, 1.0)


def test_surface_frame_is_delay_major():
    s = _surface([[1, 2, 3], [4j, 5, 6]])
    frame = s.to_frame()
    assert list(frame.columns) == ["tau_s", "nu_hz", "re", "im", "abs"]
    assert frame["tau_s"].tolist() == [0.0, 0.0, 0.0, 0.5, 0.5, 0.5]
    assert frame["nu_hz"].tolist() == [-2.0, 0.0, 2.0, -2.0, 0.0, 2.0]
    assert frame["im"].tolist()[3] == 4.0
    assert frame["abs"].tolist()[4] == 5.0


def test_surface_lookup():
    s = _surface([[1, 2, 3], [4, 5, 6]])
    assert s.index_of(0.5, 2.0) == (1, 2)
    assert s.value_at(0.4, -1.9) == 4
    assert s.peak == 6.0
    assert s.scaled(2).value_at(0.0, 0.0) == 4


def test_coverage_of_a_centered_peak():
    values = np.zeros((5, 5))
    values[2, 2] = 1.0
    assert coverage(_surface(values)) == 1.0
    values[0, 0] = 1.0
    assert coverage(_surface(values)) == pytest.approx(0.5)
