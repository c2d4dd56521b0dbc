# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the Monte Carlo section."""

from typing_extensions import NotRequired, TypedDict


class MonteCarloConfigInput(TypedDict):
    """Configuration section for trials, seeds and noise."""

    trials: NotRequired[int | str | None]
    seed: NotRequired[int | str | None]
    snr_db: NotRequired[float | str | None]
    snr_list_db: NotRequired[list[float] | str | None]
    sweep_tau_max_s: NotRequired[float | str | None]
    sweep_nu_max_hz: NotRequired[float | str | None]
