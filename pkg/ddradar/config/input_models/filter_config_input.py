# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the filter section."""

from typing_extensions import NotRequired, TypedDict


class FilterConfigInput(TypedDict):
    """Configuration section for pulse shaping."""

    alpha: NotRequired[float | str | None]
    beta: NotRequired[float | str | None]
    truncation: NotRequired[int | str | None]
    sparsity_threshold: NotRequired[float | str | None]
