# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the Gaussian pulse-shaping filter."""

from pydantic import BaseModel, Field

import ddradar.config.defaults as defs


class FilterConfig(BaseModel):
    """Configuration section for pulse shaping."""

    alpha: float = Field(
        description="The delay-axis Gaussian parameter α.", default=defs.FILTER_ALPHA
    )
    beta: float = Field(
        description="The Doppler-axis Gaussian parameter β.", default=defs.FILTER_BETA
    )
    truncation: int = Field(
        description="The number of 1/B and 1/T widths kept on each side of the filter patch.",
        default=defs.FILTER_TRUNCATION,
    )
    sparsity_threshold: float = Field(
        description="Relative magnitude below which sounding DD taps are dropped from the sparse cross-ambiguity.",
        default=defs.SPARSITY_THRESHOLD,
    )
