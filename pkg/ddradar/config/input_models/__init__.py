# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Interfaces for the experiment file input models."""

from .bench_config_input import BenchConfigInput
from .detection_config_input import DetectionConfigInput
from .filter_config_input import FilterConfigInput
from .grid_config_input import GridConfigInput
from .monte_carlo_config_input import MonteCarloConfigInput
from .radar_config_input import RadarConfigInput
from .reporting_config_input import ReportingConfigInput
from .scene_config_input import SceneConfigInput, TargetInput

__all__ = [
    "BenchConfigInput",
    "DetectionConfigInput",
    "FilterConfigInput",
    "GridConfigInput",
    "MonteCarloConfigInput",
    "RadarConfigInput",
    "ReportingConfigInput",
    "SceneConfigInput",
    "TargetInput",
]
