# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Complexity benchmark: DD-domain versus time-domain cross-ambiguity runtime against B·T."""

import logging
import math
import time
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pandas as pd
from scipy.stats import linregress

from ddradar.ambiguity import SearchRegion, cross_ambiguity_dd, cross_ambiguity_td
from ddradar.channel import apply_scene
from ddradar.config import RadarConfig, Waveform
from ddradar.dd_core import DDGrid, zak_transform
from ddradar.model import RadarScene, Target

from .emit import create_table_emitters, write_report
from .pipelines import make_sounding
from .progress import Progress, ProgressReporter

log = logging.getLogger(__name__)


def bench_grid(exponent: int, bandwidth: float) -> DDGrid:
    """Grid with B·T = 2^exponent, M = 2^ceil(k/2) and N = 2^floor(k/2)."""
    m, n = 2 ** math.ceil(exponent / 2), 2 ** (exponent // 2)
    tau_p = m / bandwidth
    return DDGrid(tau_p, bandwidth, n * tau_p)


def fit_loglog_slope(bt: list[float] | np.ndarray, seconds: list[float] | np.ndarray) -> float:
    """Slope of log(seconds) against log(B·T)."""
    return float(linregress(np.log(bt), np.log(seconds)).slope)


def _best_of(repeats: int, fn: Callable[[], object]) -> float:
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run_complexity_bench(
    config: RadarConfig,
    out_dir: str | Path,
    reporter: ProgressReporter,
    exponents: list[int] | None = None,
) -> dict[str, object]:
    """Time both cross-ambiguity paths for a pulsone sounding over B·T = 2^k.

    The DD path includes the Zak transform of the received signal. Both paths
    evaluate the same region, a fixed fraction of one period on each axis.
    """
    bench = config.bench
    exponents = bench.exponents if exponents is None else exponents
    progress = reporter.child("bench")
    rows = []
    for i, k in enumerate(exponents):
        grid = bench_grid(k, bench.bandwidth_hz)
        sounding = make_sounding(Waveform.zak_otfs, grid, config.filter)
        x, x_dd = sounding.segments[0], sounding.segments_dd[0]
        region = SearchRegion(
            0.0, bench.region_fraction * grid.tau_p, bench.region_fraction * grid.nu_p / 2
        )
        scene = RadarScene([Target(1.0, 2 * grid.dtau, 2 * grid.dnu)])
        y = apply_scene(scene, x, grid)
        threshold = config.filter.sparsity_threshold

        dd_seconds = _best_of(
            bench.repeats,
            lambda y=y, grid=grid, x_dd=x_dd, region=region: cross_ambiguity_dd(
                zak_transform(y, grid), x_dd, region, threshold
            ),
        )
        td_seconds = _best_of(
            bench.repeats, lambda y=y, x=x, region=region: cross_ambiguity_td(y, x, region)
        )
        log.info("B·T = 2^%d: DD %.4g s, TD %.4g s", k, dd_seconds, td_seconds)
        rows.append({
            "exponent": k,
            "bt": grid.bt,
            "M": grid.M,
            "N": grid.N,
            "dd_seconds": dd_seconds,
            "td_seconds": td_seconds,
        })
        progress(Progress(f"2^{k}", len(exponents), i + 1))

    table = pd.DataFrame(rows)
    slopes = {
        "dd_slope": fit_loglog_slope(table["bt"], table["dd_seconds"]),
        "td_slope": fit_loglog_slope(table["bt"], table["td_seconds"]),
    }
    for emitter in create_table_emitters(config.reporting.emit, out_dir):
        emitter.emit("bench", table)
    result = {
        "command": "bench",
        "config": config.model_dump(mode="json"),
        "timings": table.to_dict(orient="records"),
        **slopes,
    }
    write_report(out_dir, "bench_report", result)
    return result
