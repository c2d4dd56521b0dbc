# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the delay-Doppler grid."""

from pydantic import BaseModel, Field

import ddradar.config.defaults as defs


class GridConfig(BaseModel):
    """Configuration section for the sampling grid."""

    bandwidth_hz: float = Field(
        description="The sounding bandwidth B in Hz.", default=defs.CI_BANDWIDTH_HZ
    )
    duration_s: float = Field(
        description="The sounding duration T in seconds.", default=defs.CI_DURATION_S
    )
    delay_period_s: float = Field(
        description="The delay period τ_p in seconds; ν_p = 1/τ_p.",
        default=defs.CI_DELAY_PERIOD_S,
    )
    delay_oversampling: int = Field(
        description="The delay oversampling factor P.",
        default=defs.DELAY_OVERSAMPLING,
    )
    doppler_oversampling: int = Field(
        description="The Doppler oversampling factor Q.",
        default=defs.DOPPLER_OVERSAMPLING,
    )
    carrier_hz: float = Field(
        description="The RF carrier frequency used for velocity conversion.",
        default=defs.CARRIER_HZ,
    )
