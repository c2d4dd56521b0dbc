# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the radar scene."""

from pydantic import BaseModel, Field

import ddradar.config.defaults as defs
from ddradar.config.enums import GainLaw


class SceneConfig(BaseModel):
    """Configuration section for the scene source."""

    preset: str | None = Field(
        description="A named scene: single_target, four_targets, close_triplet or dense_cluster.", default=None
    )
    file: str | None = Field(
        description="A JSON scene file of {h_re, h_im, tau_s, nu_hz} records.",
        default=None,
    )
    targets: list[dict] | None = Field(
        description="Inline scene records, same schema as the scene file.",
        default=None,
    )
    rectangle_index: int = Field(
        description="The rectangle index (1..6) used for random scenes.",
        default=defs.RECTANGLE_INDEX,
    )
    rectangle_scale: float = Field(
        description="The factor applied to both rectangle axes.",
        default=defs.CI_RECTANGLE_SCALE,
    )
    target_count: int = Field(
        description="The number of targets drawn per random scene.",
        default=defs.TARGET_COUNT,
    )
    gain_law: GainLaw = Field(
        description="The law used for target gain magnitudes.", default=defs.GAIN_LAW
    )
    gain_scale: float = Field(
        description="The numerator of the inverse-delay gain law.",
        default=defs.GAIN_SCALE,
    )
    snap_to_grid: bool = Field(
        description="Snap fractional-bin delays to the nearest bin.",
        default=defs.SNAP_TO_GRID,
    )
