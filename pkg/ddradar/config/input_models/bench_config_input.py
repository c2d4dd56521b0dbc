# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the bench section."""

from typing_extensions import NotRequired, TypedDict


class BenchConfigInput(TypedDict):
    """Configuration section for the complexity benchmark."""

    exponents: NotRequired[list[int] | str | None]
    repeats: NotRequired[int | str | None]
    bandwidth_hz: NotRequired[float | str | None]
    region_fraction: NotRequired[float | str | None]
