# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Progress-reporting components."""

from .types import NullProgressReporter, PrintProgressReporter, Progress, ProgressReporter

__all__ = ["NullProgressReporter", "PrintProgressReporter", "Progress", "ProgressReporter"]
