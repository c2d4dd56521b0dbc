# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Parameterization settings for reporting and artifact emission."""

from pydantic import BaseModel, Field

import ddradar.config.defaults as defs
from ddradar.config.enums import ReporterType, TableEmitterType


class ReportingConfig(BaseModel):
    """Configuration section for reporting."""

    reporter: ReporterType = Field(
        description="The progress reporter to use.", default=defs.REPORTER
    )
    emit: list[TableEmitterType] = Field(
        description="The table formats to emit.", default=defs.EMIT
    )
    output_dir: str = Field(
        description="The base directory for run outputs.", default=defs.OUTPUT_DIR
    )
