# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for Monte Carlo experiments."""

from pydantic import BaseModel, Field

import ddradar.config.defaults as defs


class MonteCarloConfig(BaseModel):
    """Configuration section for trials, seeds and noise."""

    trials: int = Field(
        description="The number of Monte Carlo trials.", default=defs.CI_TRIALS, ge=1
    )
    seed: int = Field(description="The root random seed.", default=defs.SEED, ge=0)
    snr_db: float | None = Field(
        description="The receiver SNR in dB; null means noise-free.",
        default=defs.SNR_DB,
    )
    snr_list_db: list[float] = Field(
        description="The SNR points of the sweep in dB.",
        default=defs.SNR_LIST_DB,
    )
    sweep_tau_max_s: float = Field(
        description="The delay extent of the sweep rectangle.",
        default=defs.SNR_SWEEP_TAU_MAX_S,
    )
    sweep_nu_max_hz: float = Field(
        description="The Doppler half-extent of the sweep rectangle.",
        default=defs.SNR_SWEEP_NU_MAX_HZ,
    )
