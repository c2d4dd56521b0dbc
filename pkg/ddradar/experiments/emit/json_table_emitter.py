# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""JsonTableEmitter module."""

import logging
from pathlib import Path

import pandas as pd

from .table_emitter import TableEmitter

log = logging.getLogger(__name__)


class JsonTableEmitter(TableEmitter):
    """Writes tables as JSON lines, one record per row."""

    _root: Path

    def __init__(self, root: str | Path):
        """Create a new Json Table Emitter."""
        self._root = Path(root)

    def emit(self, name: str, data: pd.DataFrame) -> Path:
        """Emit a dataframe to the output directory."""
        path = self._root / f"{name}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        log.info("emitting JSON table %s", path)
        path.write_text(
            data.to_json(orient="records", lines=True, double_precision=15, force_ascii=False),
            encoding="utf-8",
        )
        return path
