# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for a radar experiment."""

from devtools import pformat
from pydantic import BaseModel, Field

import ddradar.config.defaults as defs
from ddradar.config.enums import Profile, Waveform

from .bench_config import BenchConfig
from .detection_config import DetectionConfig
from .filter_config import FilterConfig
from .grid_config import GridConfig
from .monte_carlo_config import MonteCarloConfig
from .reporting_config import ReportingConfig
from .scene_config import SceneConfig


class RadarConfig(BaseModel):
    """Base class for the resolved experiment configuration."""

    def __repr__(self) -> str:
        """Get a string representation."""
        return pformat(self, highlight=False)

    def __str__(self):
        """Get a string representation."""
        return self.model_dump_json(indent=4)

    root_dir: str = Field(
        description="The root directory for the configuration.", default="."
    )
    profile: Profile = Field(
        description="The profile the defaults were resolved from.", default=defs.PROFILE
    )
    waveform: Waveform = Field(
        description="The waveform used by the heatmap command.", default=defs.WAVEFORM
    )
    waveforms: list[Waveform] = Field(
        description="The waveforms compared by the Monte Carlo commands.",
        default=defs.WAVEFORMS,
    )

    grid: GridConfig = Field(description="The grid configuration.", default=GridConfig())
    """The grid configuration."""

    filter: FilterConfig = Field(
        description="The pulse-shaping configuration.", default=FilterConfig()
    )
    """The pulse-shaping configuration."""

    scene: SceneConfig = Field(
        description="The scene configuration.", default=SceneConfig()
    )
    """The scene configuration."""

    detection: DetectionConfig = Field(
        description="The detection configuration.", default=DetectionConfig()
    )
    """The detection configuration."""

    monte_carlo: MonteCarloConfig = Field(
        description="The Monte Carlo configuration.", default=MonteCarloConfig()
    )
    """The Monte Carlo configuration."""

    bench: BenchConfig = Field(
        description="The benchmark configuration.", default=BenchConfig()
    )
    """The benchmark configuration."""

    reporting: ReportingConfig = Field(
        description="The reporting configuration.", default=ReportingConfig()
    )
    """The reporting configuration."""
