# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for target detection."""

from pydantic import BaseModel, Field

import ddradar.config.defaults as defs


class DetectionConfig(BaseModel):
    """Configuration section for peak picking and ridge extraction."""

    rel_threshold: float = Field(
        description="The peak threshold relative to the surface maximum.",
        default=defs.EXPERIMENT_REL_THRESHOLD,
    )
    ridge_min_points: int = Field(
        description="The minimum number of ridge points that make a chirp line.",
        default=defs.RIDGE_MIN_POINTS,
    )
    search_margin: float = Field(
        description="The margin, in resolutions, added around the scene when sizing the search region.",
        default=defs.SEARCH_MARGIN_RESOLUTIONS,
    )
