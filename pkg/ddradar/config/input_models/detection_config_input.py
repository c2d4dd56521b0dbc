# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the detection section."""

from typing_extensions import NotRequired, TypedDict


class DetectionConfigInput(TypedDict):
    """Configuration section for detection."""

    rel_threshold: NotRequired[float | str | None]
    ridge_min_points: NotRequired[int | str | None]
    search_margin: NotRequired[float | str | None]
