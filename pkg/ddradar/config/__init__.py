# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""The experiment configuration package root."""

from .create_radar_config import create_radar_config, load_config_file
from .enums import GainLaw, Profile, ReporterType, TableEmitterType, Waveform
from .errors import (
    AliasingChirpError,
    ConfigFileError,
    ConfigurationError,
    DelayOutOfRangeError,
    GridMismatchError,
    InvalidRegionError,
    NonIntegerGridError,
    OffGridDelayError,
    OutsideFundamentalDomainError,
    SampleRateMismatchError,
    SignalLengthError,
)
from .input_models import (
    BenchConfigInput,
    DetectionConfigInput,
    FilterConfigInput,
    GridConfigInput,
    MonteCarloConfigInput,
    RadarConfigInput,
    ReportingConfigInput,
    SceneConfigInput,
    TargetInput,
)
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

__all__ = [
    "AliasingChirpError",
    "BenchConfig",
    "BenchConfigInput",
    "ConfigFileError",
    "ConfigurationError",
    "DelayOutOfRangeError",
    "DetectionConfig",
    "DetectionConfigInput",
    "FilterConfig",
    "FilterConfigInput",
    "GainLaw",
    "GridConfig",
    "GridConfigInput",
    "GridMismatchError",
    "InvalidRegionError",
    "MonteCarloConfig",
    "MonteCarloConfigInput",
    "NonIntegerGridError",
    "OffGridDelayError",
    "OutsideFundamentalDomainError",
    "Profile",
    "RadarConfig",
    "RadarConfigInput",
    "ReporterType",
    "ReportingConfig",
    "ReportingConfigInput",
    "SampleRateMismatchError",
    "SceneConfig",
    "SceneConfigInput",
    "SignalLengthError",
    "TableEmitterType",
    "TargetInput",
    "Waveform",
    "create_radar_config",
    "load_config_file",
]
