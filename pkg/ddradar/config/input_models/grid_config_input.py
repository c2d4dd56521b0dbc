# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the grid section."""

from typing_extensions import NotRequired, TypedDict


class GridConfigInput(TypedDict):
    """Configuration section for the sampling grid."""

    bandwidth_hz: NotRequired[float | str | None]
    duration_s: NotRequired[float | str | None]
    delay_period_s: NotRequired[float | str | None]
    delay_oversampling: NotRequired[int | str | None]
    doppler_oversampling: NotRequired[int | str | None]
    carrier_hz: NotRequired[float | str | None]
