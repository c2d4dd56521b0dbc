# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for a radar experiment file."""

from typing_extensions import NotRequired, TypedDict

from .bench_config_input import BenchConfigInput
from .detection_config_input import DetectionConfigInput
from .filter_config_input import FilterConfigInput
from .grid_config_input import GridConfigInput
from .monte_carlo_config_input import MonteCarloConfigInput
from .reporting_config_input import ReportingConfigInput
from .scene_config_input import SceneConfigInput


class RadarConfigInput(TypedDict):
    """Base class for the experiment file parameterization settings."""

    profile: NotRequired[str | None]
    waveform: NotRequired[str | None]
    waveforms: NotRequired[list[str] | str | None]
    grid: NotRequired[GridConfigInput | None]
    filter: NotRequired[FilterConfigInput | None]
    scene: NotRequired[SceneConfigInput | None]
    detection: NotRequired[DetectionConfigInput | None]
    monte_carlo: NotRequired[MonteCarloConfigInput | None]
    bench: NotRequired[BenchConfigInput | None]
    reporting: NotRequired[ReportingConfigInput | None]
