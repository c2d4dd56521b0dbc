# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Emitter selection from the configured `reporting.emit` list."""

from pathlib import Path

from ddradar.config.enums import TableEmitterType

from .csv_table_emitter import CSVTableEmitter
from .json_table_emitter import JsonTableEmitter
from .table_emitter import TableEmitter


def create_table_emitter(emitter_type: TableEmitterType, root: str | Path) -> TableEmitter:
    """Create the emitter for one table format, writing under `root`."""
    match emitter_type:
        case TableEmitterType.json:
            return JsonTableEmitter(root)
        case TableEmitterType.csv:
            return CSVTableEmitter(root)
        case _:
            msg = f"Unsupported table emitter type: {emitter_type}"
            raise ValueError(msg)


def create_table_emitters(
    emitter_types: list[TableEmitterType], root: str | Path
) -> list[TableEmitter]:
    """Create one emitter per configured format, in order."""
    return [create_table_emitter(emitter_type, root) for emitter_type in emitter_types]
