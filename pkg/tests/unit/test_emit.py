# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

import json

import numpy as np
import pandas as pd
import pytest

from ddradar.ambiguity import AmbiguitySurface, SearchRegion
from ddradar.config import TableEmitterType
from ddradar.experiments.emit import (
    CSVTableEmitter,
    JsonTableEmitter,
    create_table_emitter,
    create_table_emitters,
    write_report,
)


@pytest.fixture
def surface_frame():
    values = np.array([[1 + 2j, 0.1], [1 / 3, -2j]])
    region = SearchRegion(0.0, 5e-7, 250.0)
    surface = AmbiguitySurface(
        region, np.arange(2), np.arange(-1, 1), 5e-7, 250.0, values, 1.0
    )
    return surface.to_frame()


def test_csv_layout(tmp_path, surface_frame):
    path = CSVTableEmitter(tmp_path).emit("surface_0", surface_frame)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "tau_s,nu_hz,re,im,abs"
    assert len(lines) == 5
    # round-trip precision
    assert float(lines[3].split(",")[2]) == 1 / 3


def test_csv_is_byte_deterministic(tmp_path, surface_frame):
    a = CSVTableEmitter(tmp_path / "a").emit("t", surface_frame)
    b = CSVTableEmitter(tmp_path / "b").emit("t", surface_frame.copy())
    assert a.read_bytes() == b.read_bytes()


def test_json_lines(tmp_path):
    frame = pd.DataFrame({"waveform": ["zak_otfs", "chirp_single_pair"], "rmse": [1.5, 2.25]})
    path = JsonTableEmitter(tmp_path).emit("summary", frame)
    records = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
    assert records == [
        {"waveform": "zak_otfs", "rmse": 1.5},
        {"waveform": "chirp_single_pair", "rmse": 2.25},
    ]


def test_factories(tmp_path):
    assert isinstance(create_table_emitter(TableEmitterType.csv, tmp_path), CSVTableEmitter)
    emitters = create_table_emitters([TableEmitterType.json, TableEmitterType.csv], tmp_path)
    assert [type(e) for e in emitters] == [JsonTableEmitter, CSVTableEmitter]
    with pytest.raises(ValueError, match="Unsupported"):
        create_table_emitter("parquet", tmp_path)  # type: ignore


def test_reports_are_sorted_and_indented(tmp_path):
    path = write_report(tmp_path / "reports", "heatmap_report", {"b": 1, "a": [1, 2]})
    text = path.read_text(encoding="utf-8")
    assert text.startswith('{\n    "a"')
    assert json.loads(text) == {"a": [1, 2], "b": 1}
