# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the complexity benchmark."""

from pydantic import BaseModel, Field

import ddradar.config.defaults as defs


class BenchConfig(BaseModel):
    """Configuration section for the complexity benchmark."""

    exponents: list[int] = Field(
        description="The log2 values of B·T to time.", default=defs.BENCH_EXPONENTS
    )
    repeats: int = Field(
        description="The timing repeats; the minimum is kept.",
        default=defs.BENCH_REPEATS,
        ge=1,
    )
    bandwidth_hz: float = Field(
        description="The bandwidth used for every benchmark grid.",
        default=defs.BENCH_BANDWIDTH_HZ,
    )
    region_fraction: float = Field(
        description="The fraction of τ_p and ν_p covered by the timed search region.",
        default=defs.BENCH_REGION_FRACTION,
        gt=0,
        le=0.5,
    )
