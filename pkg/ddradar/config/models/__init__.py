# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Interfaces for the resolved configuration models."""

from .bench_config import BenchConfig
from .detection_config import DetectionConfig
from .filter_config import FilterConfig
from .grid_config import GridConfig
from .monte_carlo_config import MonteCarloConfig
from .radar_config import RadarConfig
from .reporting_config import ReportingConfig
from .scene_config import SceneConfig

__all__ = [
    "BenchConfig",
    "DetectionConfig",
    "FilterConfig",
    "GridConfig",
    "MonteCarloConfig",
    "RadarConfig",
    "ReportingConfig",
    "SceneConfig",
]
