# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the experiment configuration, loaded from files and environment variables."""

import json
import logging
import os
from enum import Enum
from pathlib import Path
from typing import cast

import yaml
from environs import Env
from pydantic import TypeAdapter

import ddradar.config.defaults as defs

from .enums import GainLaw, Profile, ReporterType, TableEmitterType, Waveform
from .environment_reader import EnvironmentReader
from .errors import ConfigFileError
from .input_models import RadarConfigInput
from .models import (
    BenchConfig,
    DetectionConfig,
    FilterConfig,
    GridConfig,
    MonteCarloConfig,
    RadarConfig,
    ReportingConfig,
    SceneConfig,
)
from .read_dotenv import read_dotenv

InputModelValidator = TypeAdapter(RadarConfigInput)

log = logging.getLogger(__name__)


def create_radar_config(
    values: RadarConfigInput | None = None,
    root_dir: str | None = None,
    profile: Profile | str | None = None,
) -> RadarConfig:
    """Load the experiment configuration from a dictionary.

    Values are resolved per key from the dictionary, then from
    DDRADAR_<SECTION>_<KEY> environment variables, then from the profile
    defaults. An explicit `profile` argument overrides the one in `values`.
    """
    values = values or {}
    root_dir = root_dir or str(Path.cwd())
    env = _make_env(root_dir)
    _token_replace(cast(dict, values))
    InputModelValidator.validate_python(values, strict=True)

    reader = EnvironmentReader(env)

    with reader.use(Section.root, cast(dict, values)):
        profile = Profile(profile or reader.str(Fragment.profile) or defs.PROFILE)
        waveform = Waveform(reader.str(Fragment.waveform) or defs.WAVEFORM)
        waveforms = [
            Waveform(w)
            for w in reader.str_list(Fragment.waveforms, [w.value for w in defs.WAVEFORMS])
        ]
    paper = profile == Profile.paper
    log.info("resolving configuration for profile %s", profile.value)

    with reader.use(Section.grid, values.get("grid")):
        grid = GridConfig(
            bandwidth_hz=reader.float(
                Fragment.bandwidth_hz,
                defs.PAPER_BANDWIDTH_HZ if paper else defs.CI_BANDWIDTH_HZ,
            ),
            duration_s=reader.float(
                Fragment.duration_s,
                defs.PAPER_DURATION_S if paper else defs.CI_DURATION_S,
            ),
            delay_period_s=reader.float(
                Fragment.delay_period_s,
                defs.PAPER_DELAY_PERIOD_S if paper else defs.CI_DELAY_PERIOD_S,
            ),
            delay_oversampling=reader.int(
                Fragment.delay_oversampling, defs.DELAY_OVERSAMPLING
            ),
            doppler_oversampling=reader.int(
                Fragment.doppler_oversampling, defs.DOPPLER_OVERSAMPLING
            ),
            carrier_hz=reader.float(Fragment.carrier_hz, defs.CARRIER_HZ),
        )

    with reader.use(Section.filter, values.get("filter")):
        filter_config = FilterConfig(
            alpha=reader.float(Fragment.alpha, defs.FILTER_ALPHA),
            beta=reader.float(Fragment.beta, defs.FILTER_BETA),
            truncation=reader.int(Fragment.truncation, defs.FILTER_TRUNCATION),
            sparsity_threshold=reader.float(
                Fragment.sparsity_threshold, defs.SPARSITY_THRESHOLD
            ),
        )

    scene_values = values.get("scene") or {}
    with reader.use(Section.scene, cast(dict, scene_values)):
        scene = SceneConfig(
            preset=reader.str(Fragment.preset),
            file=reader.str(Fragment.file),
            targets=cast(list[dict] | None, scene_values.get("targets")),
            rectangle_index=reader.int(
                Fragment.rectangle_index, defs.RECTANGLE_INDEX
            ),
            rectangle_scale=reader.float(
                Fragment.rectangle_scale,
                defs.PAPER_RECTANGLE_SCALE if paper else defs.CI_RECTANGLE_SCALE,
            ),
            target_count=reader.int(Fragment.target_count, defs.TARGET_COUNT),
            gain_law=GainLaw(reader.str(Fragment.gain_law) or defs.GAIN_LAW),
            gain_scale=reader.float(Fragment.gain_scale, defs.GAIN_SCALE),
            snap_to_grid=reader.bool(Fragment.snap_to_grid, defs.SNAP_TO_GRID),
        )

    with reader.use(Section.detection, values.get("detection")):
        detection = DetectionConfig(
            rel_threshold=reader.float(
                Fragment.rel_threshold, defs.EXPERIMENT_REL_THRESHOLD
            ),
            ridge_min_points=reader.int(
                Fragment.ridge_min_points, defs.RIDGE_MIN_POINTS
            ),
            search_margin=reader.float(
                Fragment.search_margin, defs.SEARCH_MARGIN_RESOLUTIONS
            ),
        )

    with reader.use(Section.monte_carlo, values.get("monte_carlo")):
        monte_carlo = MonteCarloConfig(
            trials=reader.int(
                Fragment.trials, defs.PAPER_TRIALS if paper else defs.CI_TRIALS
            ),
            seed=reader.int(Fragment.seed, defs.SEED),
            snr_db=reader.float(Fragment.snr_db, defs.SNR_DB),
            snr_list_db=reader.float_list(Fragment.snr_list_db, defs.SNR_LIST_DB),
            sweep_tau_max_s=reader.float(
                Fragment.sweep_tau_max_s, defs.SNR_SWEEP_TAU_MAX_S
            ),
            sweep_nu_max_hz=reader.float(
                Fragment.sweep_nu_max_hz, defs.SNR_SWEEP_NU_MAX_HZ
            ),
        )

    with reader.use(Section.bench, values.get("bench")):
        bench = BenchConfig(
            exponents=[
                int(e)
                for e in reader.float_list(
                    Fragment.exponents, [float(e) for e in defs.BENCH_EXPONENTS]
                )
            ],
            repeats=reader.int(Fragment.repeats, defs.BENCH_REPEATS),
            bandwidth_hz=reader.float(Fragment.bandwidth_hz, defs.BENCH_BANDWIDTH_HZ),
            region_fraction=reader.float(
                Fragment.region_fraction, defs.BENCH_REGION_FRACTION
            ),
        )

    with reader.use(Section.reporting, values.get("reporting")):
        reporting = ReportingConfig(
            reporter=ReporterType(reader.str(Fragment.reporter) or defs.REPORTER),
            emit=[
                TableEmitterType(e)
                for e in reader.str_list(Fragment.emit, [e.value for e in defs.EMIT])
            ],
            output_dir=reader.str(Fragment.output_dir) or defs.OUTPUT_DIR,
        )

    return RadarConfig(
        root_dir=root_dir,
        profile=profile,
        waveform=waveform,
        waveforms=waveforms,
        grid=grid,
        filter=filter_config,
        scene=scene,
        detection=detection,
        monte_carlo=monte_carlo,
        bench=bench,
        reporting=reporting,
    )


def load_config_file(path: str | Path) -> RadarConfigInput:
    """Read a YAML or JSON experiment file into an input dictionary."""
    path = Path(path)
    if not path.exists():
        raise ConfigFileError(str(path), "file not found")
    text = path.read_text(encoding="utf-8")
    match path.suffix.lower():
        case ".yaml" | ".yml":
            data = yaml.safe_load(text)
        case ".json":
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise ConfigFileError(str(path), str(e)) from e
        case _:
            raise ConfigFileError(str(path), f"unsupported suffix {path.suffix!r}")
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigFileError(str(path), "top level must be a mapping")
    return cast(RadarConfigInput, data)


class Fragment(str, Enum):
    """Configuration Fragments."""

    profile = "PROFILE"
    waveform = "WAVEFORM"
    waveforms = "WAVEFORMS"
    bandwidth_hz = "BANDWIDTH_HZ"
    duration_s = "DURATION_S"
    delay_period_s = "DELAY_PERIOD_S"
    delay_oversampling = "DELAY_OVERSAMPLING"
    doppler_oversampling = "DOPPLER_OVERSAMPLING"
    carrier_hz = "CARRIER_HZ"
    alpha = "ALPHA"
    beta = "BETA"
    truncation = "TRUNCATION"
    sparsity_threshold = "SPARSITY_THRESHOLD"
    preset = "PRESET"
    file = "FILE"
    rectangle_index = "RECTANGLE_INDEX"
    rectangle_scale = "RECTANGLE_SCALE"
    target_count = "TARGET_COUNT"
    gain_law = "GAIN_LAW"
    gain_scale = "GAIN_SCALE"
    snap_to_grid = "SNAP_TO_GRID"
    rel_threshold = "REL_THRESHOLD"
    ridge_min_points = "RIDGE_MIN_POINTS"
    search_margin = "SEARCH_MARGIN"
    trials = "TRIALS"
    seed = "SEED"
    snr_db = "SNR_DB"
    snr_list_db = "SNR_LIST_DB"
    sweep_tau_max_s = "SWEEP_TAU_MAX_S"
    sweep_nu_max_hz = "SWEEP_NU_MAX_HZ"
    exponents = "EXPONENTS"
    repeats = "REPEATS"
    region_fraction = "REGION_FRACTION"
    reporter = "REPORTER"
    emit = "EMIT"
    output_dir = "OUTPUT_DIR"


class Section(str, Enum):
    """Configuration Sections."""

    root = ""
    grid = "GRID"
    filter = "FILTER"
    scene = "SCENE"
    detection = "DETECTION"
    monte_carlo = "MONTE_CARLO"
    bench = "BENCH"
    reporting = "REPORTING"


def _make_env(root_dir: str) -> Env:
    read_dotenv(root_dir)
    env = Env(expand_vars=True)
    env.read_env()
    return env


def _token_replace(data: dict):
    """Replace env-var tokens in a dictionary object."""
    for key, value in data.items():
        if isinstance(value, dict):
            _token_replace(value)
        elif isinstance(value, str):
            data[key] = os.path.expandvars(value)
