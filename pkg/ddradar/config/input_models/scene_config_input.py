# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the scene section."""

from typing_extensions import NotRequired, TypedDict


class TargetInput(TypedDict):
    """A single scene record."""

    h_re: float
    h_im: NotRequired[float]
    tau_s: float
    nu_hz: float


class SceneConfigInput(TypedDict):
    """Configuration section for the scene source."""

    preset: NotRequired[str | None]
    file: NotRequired[str | None]
    targets: NotRequired[list[TargetInput] | None]
    rectangle_index: NotRequired[int | str | None]
    rectangle_scale: NotRequired[float | str | None]
    target_count: NotRequired[int | str | None]
    gain_law: NotRequired[str | None]
    gain_scale: NotRequired[float | str | None]
    snap_to_grid: NotRequired[bool | str | None]
