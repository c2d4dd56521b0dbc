# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for the reporting section."""

from typing_extensions import NotRequired, TypedDict


class ReportingConfigInput(TypedDict):
    """Configuration section for reporting."""

    reporter: NotRequired[str | None]
    emit: NotRequired[list[str] | str | None]
    output_dir: NotRequired[str | None]
