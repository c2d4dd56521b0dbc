# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""The radar channel: scene application and receiver noise."""

from .noise import add_awgn, make_rng
from .scene_ops import apply_scene, crystallization_check, delay_residuals, snap_delay

__all__ = [
    "add_awgn",
    "apply_scene",
    "crystallization_check",
    "delay_residuals",
    "make_rng",
    "snap_delay",
]
