# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import numpy as np
import pytest

from ddradar.ambiguity import (
    SearchRegion,
    chirp_delay_integral,
    chirp_patch_self_ambiguity,
    chirp_self_ambiguity_oracle,
    cross_ambiguity_dd,
    cross_ambiguity_td,
    moyal_volume,
    pulsone_self_ambiguity_oracle,
)
from ddradar.channel import apply_scene
from ddradar.config import ConfigurationError, GridMismatchError, Waveform
from ddradar.dd_core import DDPatch, DDSignal, twisted_convolve, zak_transform
from ddradar.model import RadarScene, Target
from ddradar.waveforms import (
    ChirpParams,
    PulsoneParams,
    chirp_schedule,
    make_filtered_chirp,
    make_pulsone,
)


def _on_grid_scene(grid):
    return RadarScene([
        Target(1.0, 4 * grid.dtau, -2 * grid.dnu),
        Target(0.5 - 0.2j, 9 * grid.dtau, 3 * grid.dnu),
        Target(0.3j, 13 * grid.dtau, 0.0),
    ])


@pytest.fixture
def pulsone(small_grid, small_filter):
    x_dd, x = make_pulsone(PulsoneParams(0.0, 0.0, small_filter), small_grid)
    return x, x_dd


@pytest.fixture
def chirp(small_grid, small_filter):
    segment = chirp_schedule(Waveform.chirp_single_pair, small_grid).segments[0]
    x = make_filtered_chirp(segment, small_filter, small_grid)
    return x, zak_transform(x, small_grid)


@pytest.mark.parametrize("sounding", ["pulsone", "chirp"])
@pytest.mark.parametrize("sparsity", [0.0, None])
def test_dd_matches_time_domain(small_grid, sounding, sparsity, request):
    x, x_dd = request.getfixturevalue(sounding)
    y = apply_scene(_on_grid_scene(small_grid), x, small_grid)
    region = SearchRegion(0.0, 10e-6, 8 * small_grid.dnu)
    td = cross_ambiguity_td(y, x, region)
    dd = cross_ambiguity_dd(zak_transform(y, small_grid), x_dd, region, sparsity)
    np.testing.assert_array_equal(td.k, dd.k)
    np.testing.assert_array_equal(td.l, dd.l)
    assert td.dnu == pytest.approx(dd.dnu)
    assert np.abs(td.values - dd.values).max() <= 1e-6 * td.peak


def test_sparse_threshold_keeps_the_surface(small_grid, pulsone):
    x, x_dd = pulsone
    y_dd = zak_transform(apply_scene(_on_grid_scene(small_grid), x, small_grid), small_grid)
    region = SearchRegion(0.0, 10e-6, 8 * small_grid.dnu)
    exact = cross_ambiguity_dd(y_dd, x_dd, region, 0.0)
    sparse = cross_ambiguity_dd(y_dd, x_dd, region, 1e-4)
    assert np.abs(exact.values - sparse.values).max() <= 1e-2 * exact.peak


def test_received_surface_is_a_twisted_convolution(small_grid, pulsone):
    x, x_dd = pulsone
    scene = RadarScene([
        Target(1.0, 2 * small_grid.dtau, -small_grid.dnu),
        Target(0.4j, 5 * small_grid.dtau, 2 * small_grid.dnu),
    ])
    y_dd = zak_transform(apply_scene(scene, x, small_grid), small_grid)
    region = SearchRegion(0.0, 8 * small_grid.dtau, 4 * small_grid.dnu)
    a_yx = cross_ambiguity_dd(y_dd, x_dd, region, 0.0)

    self_region = SearchRegion(-6 * small_grid.dtau, 8 * small_grid.dtau, 7 * small_grid.dnu)
    a_xx = cross_ambiguity_dd(x_dd, x_dd, self_region, 0.0)
    patch = DDPatch(small_grid, a_xx.values, int(a_xx.k[0]), int(a_xx.l[0]))
    predicted = twisted_convolve(scene.as_patch(small_grid), patch)
    expected = np.array([[predicted.value_at(k, l) for l in a_yx.l] for k in a_yx.k])  # noqa: E741
    np.testing.assert_allclose(a_yx.values, expected, atol=1e-8 * a_yx.peak)


def test_self_ambiguity_peaks_at_the_energy(small_grid, pulsone):
    x, x_dd = pulsone
    region = SearchRegion(0.0, 2 * small_grid.dtau, 2 * small_grid.dnu)
    surface = cross_ambiguity_dd(x_dd, x_dd, region)
    assert surface.value_at(0.0, 0.0) == pytest.approx(x.energy, rel=1e-4)
    assert surface.sounding_energy == pytest.approx(1.0)


def test_grids_must_match(small_grid, tiny_grid):
    with pytest.raises(GridMismatchError):
        cross_ambiguity_dd(
            DDSignal.zeros(small_grid), DDSignal.zeros(tiny_grid), SearchRegion(0.0, 1e-6, 1.0)
        )


def test_chirp_oracle_at_the_origin(ci_grid, ci_filter):
    params = chirp_schedule(Waveform.chirp_single_pair, ci_grid).segments[0]
    assert chirp_self_ambiguity_oracle(params, ci_filter, 0.0, 0.0) == pytest.approx(1.0, rel=1e-6)


@pytest.mark.timeout(120)
def test_chirp_oracle_matches_numerics(ci_grid, ci_filter):
    params = chirp_schedule(Waveform.chirp_single_pair, ci_grid).segments[0]
    # the closed form assumes the whole W₂ window
    x = make_filtered_chirp(params, ci_filter, ci_grid, support=params.duration)
    region = SearchRegion(-10 * ci_grid.dtau, 10 * ci_grid.dtau, 10 * ci_grid.dnu)
    surface = cross_ambiguity_td(x, x, region)
    oracle = np.array([
        [chirp_self_ambiguity_oracle(params, ci_filter, tau, nu) for nu in surface.nus]
        for tau in surface.taus
    ])
    assert np.abs(surface.values - oracle).max() <= 1e-3 * np.abs(oracle).max()


@pytest.mark.timeout(120)
def test_chirp_delay_integral_matches_numerics(ci_grid, ci_filter):
    params = chirp_schedule(Waveform.chirp_single_pair, ci_grid).segments[0]
    x = make_filtered_chirp(params, ci_filter, ci_grid, support=params.duration)
    dtau, dnu = ci_grid.dtau, ci_grid.dnu
    region = SearchRegion(-10 * dtau, 10 * dtau, 10 * dnu)
    surface = cross_ambiguity_td(x, x, region)
    delay_form = np.array([
        [chirp_delay_integral(params, ci_filter, tau, nu) for nu in surface.nus]
        for tau in surface.taus
    ])
    assert np.abs(surface.values - delay_form).max() <= 1e-3 * np.abs(delay_form).max()
    for tau, nu in [(0.0, 0.0), (3 * dtau, 5 * dnu), (-2 * dtau, -7 * dnu)]:
        assert chirp_delay_integral(params, ci_filter, tau, nu) == pytest.approx(
            chirp_self_ambiguity_oracle(params, ci_filter, tau, nu), abs=1e-6
        )


def test_literal_delay_integral_leaves_the_chirp_ridge(ci_grid, ci_filter):
    params = chirp_schedule(Waveform.chirp_single_pair, ci_grid).segments[0]
    k = 4
    l = params.slope * k * ci_grid.dtau / ci_grid.dnu  # noqa: E741
    assert l == pytest.approx(round(l))
    tau, nu = k * ci_grid.dtau, round(l) * ci_grid.dnu
    assert chirp_delay_integral(params, ci_filter, 0.0, 0.0, literal=True) == pytest.approx(1.0)
    # on the ridge ν = aτ the surface stays near one, the literal form does not
    assert abs(chirp_delay_integral(params, ci_filter, tau, nu)) == pytest.approx(1.0, abs=1e-3)
    assert abs(chirp_delay_integral(params, ci_filter, tau, nu, literal=True)) < 0.05


def test_chirp_patch_matches_numerics(tiny_grid, tiny_filter):
    b, t = tiny_grid.bandwidth, tiny_grid.duration
    params = ChirpParams(2 * b / t, t / 2, -t / 4)
    x = make_filtered_chirp(params, tiny_filter, tiny_grid, support=params.duration)
    region = SearchRegion(-3 * tiny_grid.dtau, 3 * tiny_grid.dtau, 6 * tiny_grid.dnu)
    surface = cross_ambiguity_td(x, x, region)
    patch = chirp_patch_self_ambiguity(params, tiny_filter, tiny_grid, reach=3)
    expected = np.array([[patch.value_at(k, l) for l in surface.l] for k in surface.k])  # noqa: E741
    numeric = surface.values / surface.value_at(0.0, 0.0)
    assert np.abs(numeric - expected).max() <= 2e-3


def test_chirp_patch_needs_an_on_grid_slope(tiny_grid, tiny_filter):
    params = ChirpParams(1.234e9, tiny_grid.duration / 2, -tiny_grid.duration / 4)
    with pytest.raises(ConfigurationError):
        chirp_patch_self_ambiguity(params, tiny_filter, tiny_grid, reach=2)


def test_pulsone_oracle_near_the_origin(small_grid, small_filter, pulsone):
    _, x_dd = pulsone
    region = SearchRegion(-2 * small_grid.dtau, 2 * small_grid.dtau, 2 * small_grid.dnu)
    surface = cross_ambiguity_dd(x_dd, x_dd, region, 0.0)
    for i, tau in enumerate(surface.taus):
        for j, nu in enumerate(surface.nus):
            expected = pulsone_self_ambiguity_oracle(small_filter, small_grid, 0, 0, tau, nu)
            assert abs(surface.values[i, j] - expected) <= 1e-6


def test_pulsone_lattice(ci_grid, ci_filter):
    x_dd, _ = make_pulsone(PulsoneParams(0.0, 0.0, ci_filter), ci_grid)
    region = SearchRegion(-ci_grid.tau_p, ci_grid.tau_p, ci_grid.nu_p)
    surface = cross_ambiguity_dd(x_dd, x_dd, region)
    mag = surface.magnitude
    for n in (-1, 0, 1):
        for m in (-1, 0, 1):
            tau, nu = ci_grid.lattice_point(n, m)
            i, j = surface.index_of(tau, nu)
            assert mag[i, j] == pytest.approx(1.0, rel=2e-2)
            assert mag[i, j] >= mag[max(i - 1, 0) : i + 2, max(j - 1, 0) : j + 2].max() - 1e-12
    half_tau, half_nu = ci_grid.tau_p / 2, ci_grid.nu_p / 2
    for tau, nu in [(half_tau, 0.0), (0.0, half_nu), (half_tau, half_nu)]:
        assert abs(surface.value_at(tau, nu)) < 1e-6


def test_pulsone_volume_over_the_full_plane(tiny_grid, tiny_filter):
    _, x = make_pulsone(PulsoneParams(0.0, 0.0, tiny_filter), tiny_grid)
    region = SearchRegion(0.0, (tiny_grid.length - 1) * tiny_grid.dt, 127 / tiny_grid.period)
    surface = cross_ambiguity_td(x, x, region)
    assert moyal_volume(surface) == pytest.approx(1.0, rel=1e-3)
    assert moyal_volume(surface.scaled(3.0)) == pytest.approx(9 * moyal_volume(surface))


def test_chirp_volume_over_the_full_plane(tiny_grid, tiny_filter):
    params = chirp_schedule(Waveform.chirp_single_pair, tiny_grid).segments[0]
    x = make_filtered_chirp(params, tiny_filter, tiny_grid)
    # every delay bin and all but one Doppler bin of the L x L plane
    region = SearchRegion(0.0, (tiny_grid.length - 1) * tiny_grid.dt, 127 / tiny_grid.period)
    volume = moyal_volume(cross_ambiguity_td(x, x, region))
    assert volume == pytest.approx(x.energy**2, rel=1e-3)
