# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""The TableEmitter protocol."""

from pathlib import Path
from typing import Protocol

import pandas as pd


class TableEmitter(Protocol):
    """Writes a named result table under the run artifacts directory."""

    def emit(self, name: str, data: pd.DataFrame) -> Path:
        """Emit a dataframe and return the written path."""
