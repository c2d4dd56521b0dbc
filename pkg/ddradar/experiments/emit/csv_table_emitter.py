# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""CSVTableEmitter module."""

import logging
from pathlib import Path

import pandas as pd

from .table_emitter import TableEmitter

log = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


class CSVTableEmitter(TableEmitter):
    """Writes tables as CSV with round-trip float precision and no index column."""

    _root: Path

    def __init__(self, root: str | Path):
        """Create a new CSV Table Emitter."""
        self._root = Path(root)

    def emit(self, name: str, data: pd.DataFrame) -> Path:
        """Emit a dataframe to the output directory."""
        path = self._root / f"{name}.csv"
        path.parent.mkdir(parents=True, exist_ok=True)
        log.info("emitting CSV table %s", path)
        path.write_text(
            data.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n"),
            encoding="utf-8",
        )
        return path
