# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import random

import pytest

from ddradar.ambiguity import SearchRegion
from ddradar.config import ConfigurationError
from ddradar.estimator import region_miss_penalty, rms_error, to_range_velocity
from ddradar.model import RadarScene, Target, TargetEstimate

US = 1e-6
B, T = 4e6, 20e-3


def _est(tau, nu):
    return TargetEstimate(tau, nu, 1.0 + 0j, 1.0)


def test_range_and_velocity():
    r, v = to_range_velocity(_est(1 * US, -400.0), 1e9)
    assert r == pytest.approx(149.896229)
    assert v == pytest.approx(-59.9584916)
    with pytest.raises(ConfigurationError):
        to_range_velocity(_est(1 * US, 0.0), 0.0)


def test_exact_estimates_score_zero():
    truth = RadarScene([Target(1.0, 1 * US, -400.0), Target(1.0, 3 * US, 175.0)])
    score = rms_error([_est(3 * US, 175.0), _est(1 * US, -400.0)], truth, 1e9, bandwidth=B, duration=T)
    assert score.range_rmse == pytest.approx(0.0)
    assert score.velocity_rmse == pytest.approx(0.0)
    assert score.missed == 0
    assert not score.flagged


def test_single_delay_error():
    truth = RadarScene([Target(1.0, 1 * US, 0.0)])
    score = rms_error([_est(1.25 * US, 0.0)], truth, 1e9, bandwidth=B, duration=T)
    assert score.range_rmse == pytest.approx(37.4740572)
    assert score.velocity_rmse == pytest.approx(0.0)


def test_matching_ignores_estimate_order():
    truth = RadarScene([
        Target(1.0, 1 * US, -400.0),
        Target(1.0, 2 * US, 100.0),
        Target(1.0, 4 * US, 300.0),
    ])
    estimates = [_est(1.1 * US, -390.0), _est(2 * US, 120.0), _est(3.9 * US, 300.0)]
    forward = rms_error(estimates, truth, 1e9, bandwidth=B, duration=T)
    backward = rms_error(estimates[::-1], truth, 1e9, bandwidth=B, duration=T)
    assert forward.range_rmse == pytest.approx(backward.range_rmse)
    assert forward.velocity_rmse == pytest.approx(backward.velocity_rmse)


def test_no_estimates_are_penalized():
    truth = RadarScene([Target(1.0, 1 * US, 0.0), Target(1.0, 2 * US, 0.0)])
    score = rms_error([], truth, 1e9, bandwidth=B, duration=T, miss_penalty=(500.0, 40.0))
    assert (score.range_rmse, score.velocity_rmse) == (500.0, 40.0)
    assert score.missed == 2
    assert score.flagged


def test_no_estimates_default_to_a_finite_penalty():
    truth = RadarScene([Target(1.0, 1 * US, 0.0), Target(1.0, 2 * US, -300.0)])
    score = rms_error([], truth, 1e9, bandwidth=B, duration=T)
    expected = region_miss_penalty(SearchRegion(0.0, 2 * US + 1 / B, 300.0 + 1 / T), 1e9)
    assert (score.range_rmse, score.velocity_rmse) == pytest.approx(expected)
    assert expected == pytest.approx((337.2665, 104.9271), rel=1e-5)
    assert score.missed == 2
    assert score.flagged


def test_empty_truth_raises():
    with pytest.raises(ConfigurationError):
        rms_error([_est(1 * US, 0.0)], RadarScene(), 1e9, bandwidth=B, duration=T)


def test_missing_estimates_use_the_nearest():
    truth = RadarScene([Target(1.0, 1 * US, 0.0), Target(1.0, 2 * US, 0.0)])
    score = rms_error([_est(1 * US, 0.0)], truth, 1e9, bandwidth=B, duration=T)
    assert score.missed == 1
    assert score.range_rmse == pytest.approx(105.99, abs=0.01)


def test_large_scenes_use_the_assignment_solver():
    targets = [Target(1.0, (i + 1) * 0.5 * US, 50.0 * i - 200.0) for i in range(8)]
    estimates = [_est(t.tau, t.nu) for t in targets]
    random.Random(3).shuffle(estimates)
    score = rms_error(estimates, RadarScene(targets), 1e9, bandwidth=B, duration=T)
    assert score.range_rmse == pytest.approx(0.0)
    assert score.velocity_rmse == pytest.approx(0.0)
