# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Data model package for radar scenes and target estimates."""

from .estimate import DetectionReport, RmsScore, TargetEstimate
from .target import RadarScene, Target

__all__ = [
    "DetectionReport",
    "RadarScene",
    "RmsScore",
    "Target",
    "TargetEstimate",
]
