# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Definitions for emitting experiment tables and reports."""

from .csv_table_emitter import CSVTableEmitter
from .factories import create_table_emitter, create_table_emitters
from .json_table_emitter import JsonTableEmitter
from .report import write_report
from .table_emitter import TableEmitter

__all__ = [
    "CSVTableEmitter",
    "JsonTableEmitter",
    "TableEmitter",
    "create_table_emitter",
    "create_table_emitters",
    "write_report",
]
