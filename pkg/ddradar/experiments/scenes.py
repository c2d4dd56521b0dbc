# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Scene sources: figure presets, JSON scene files and random rectangle draws."""

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ddradar.ambiguity import SearchRegion
from ddradar.config import ConfigFileError, ConfigurationError, GainLaw, SceneConfig
from ddradar.model import RadarScene, Target

log = logging.getLogger(__name__)

US = 1e-6

# (tau_s, nu_hz, phase_rad)
PRESETS: dict[str, list[tuple[float, float, float]]] = {
    "single_target": [(1.25 * US, -350.0, 0.0)],
    "four_targets": [
        (1.0 * US, -400.0, 0.0),
        (3.125 * US, 175.0, 0.0),
        (2.375 * US, -550.0, 0.0),
        (4.25 * US, -600.0, 0.0),
    ],
    # three-target resolution scene: positions and |h| = 1e-7/τ are given, phases are not.
    # Both neighbours of (0.6 μs, -220 Hz) sit in quadrature with it.
    "close_triplet": [
        (0.6 * US, -220.0, 0.0),
        (0.95 * US, -220.0, math.pi / 2),
        (0.6 * US, -290.0, math.pi / 2),
    ],
    "dense_cluster": [
        (0.125 * US, 50.0, 0.0),
        (0.25 * US, 75.0, 0.0),
        (0.375 * US, -25.0, 0.0),
        (0.5 * US, -100.0, 0.0),
    ],
}


def gain_magnitude(tau: float, law: GainLaw, scale: float) -> float:
    """Get |h| for a target at delay `tau`."""
    match law:
        case GainLaw.inverse_delay:
            if tau <= 0:
                msg = "the inverse-delay gain law needs positive delays"
                raise ConfigurationError(msg)
            return scale / tau
        case GainLaw.unit:
            return 1.0
        case _:
            msg = f"unsupported gain law: {law}"
            raise ConfigurationError(msg)


def preset_scene(name: str, law: GainLaw = GainLaw.inverse_delay, scale: float = 1e-7) -> RadarScene:
    """Build a named figure scene."""
    if name not in PRESETS:
        msg = f"unknown scene preset {name!r}; expected one of {sorted(PRESETS)}"
        raise ConfigurationError(msg)
    return RadarScene([
        Target(gain_magnitude(tau, law, scale) * np.exp(1j * phase), tau, nu)
        for tau, nu, phase in PRESETS[name]
    ])


def load_scene_file(path: str | Path) -> RadarScene:
    """Read a JSON list of {h_re, h_im, tau_s, nu_hz} records."""
    path = Path(path)
    if not path.exists():
        raise ConfigFileError(str(path), "scene file not found")
    try:
        records = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigFileError(str(path), str(e)) from e
    if not isinstance(records, list):
        raise ConfigFileError(str(path), "a scene file holds a list of target records")
    try:
        return RadarScene.from_records(records)
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigFileError(str(path), f"bad target record: {e}") from e


@dataclass(frozen=True)
class RectangleSpec:
    """Rectangle i covers [0, (7 - i) μs] × [-200(7 - i), 200(7 - i)] Hz, both axes scalable."""

    index: int
    """Rectangle index, 1 (largest) to 6 (smallest)."""

    delay_scale: float = 1.0
    """Factor applied to the delay extent."""

    doppler_scale: float = 1.0
    """Factor applied to the Doppler extent."""

    def __post_init__(self):
        """Validate the index."""
        if not 1 <= self.index <= 6:
            msg = f"rectangle index must lie in 1..6, got {self.index!r}"
            raise ConfigurationError(msg)

    @property
    def tau_max(self) -> float:
        """Largest delay in seconds."""
        return (7 - self.index) * US * self.delay_scale

    @property
    def nu_max(self) -> float:
        """Doppler half-extent in Hz."""
        return 200.0 * (7 - self.index) * self.doppler_scale

    def region(self, tau_margin: float = 0.0, nu_margin: float = 0.0) -> SearchRegion:
        """Get the search region covering the rectangle plus margins."""
        return SearchRegion(0.0, self.tau_max + tau_margin, self.nu_max + nu_margin)


def random_scene(
    tau_max: float,
    nu_max: float,
    count: int,
    rng: np.random.Generator,
    law: GainLaw = GainLaw.inverse_delay,
    scale: float = 1e-7,
) -> RadarScene:
    """Draw targets uniformly in [0, tau_max) × [-nu_max, nu_max) with uniform gain phases."""
    if count < 1:
        msg = f"target count must be positive, got {count!r}"
        raise ConfigurationError(msg)
    taus = rng.uniform(0.0, tau_max, count)
    nus = rng.uniform(-nu_max, nu_max, count)
    phases = rng.uniform(0.0, 2 * np.pi, count)
    return RadarScene([
        Target(gain_magnitude(float(t), law, scale) * np.exp(1j * p), float(t), float(n))
        for t, n, p in zip(taus, nus, phases, strict=True)
    ])


def scene_from_config(config: SceneConfig) -> RadarScene:
    """Resolve a fixed scene: inline targets, then the scene file, then the preset."""
    if config.targets is not None:
        return RadarScene.from_records(config.targets)
    if config.file is not None:
        return load_scene_file(config.file)
    if config.preset is not None:
        return preset_scene(config.preset, config.gain_law, config.gain_scale)
    log.info("no scene configured, using an empty scene")
    return RadarScene()
