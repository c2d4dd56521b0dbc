# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""A configuration reader that layers config-file sections over environment variables."""

from __future__ import annotations

from collections.abc import Callable
from contextlib import contextmanager
from enum import Enum
from typing import Any, TypeVar

from environs import Env

T = TypeVar("T")

KeyValue = str | Enum

ENV_PREFIX = "DDRADAR"


def read_key(value: KeyValue) -> str:
    """Read a key value."""
    if not isinstance(value, str):
        return value.value.lower()
    return value.lower()


class EnvironmentReader:
    """Resolve a key from the active config section, then from DDRADAR_<SECTION>_<KEY>."""

    _env: Env
    _section_stack: list[tuple[str, dict]]

    def __init__(self, env: Env):
        self._env = env
        self._section_stack = []

    @property
    def env(self) -> Env:
        """Get the environment object."""
        return self._env

    def use(self, name: KeyValue, values: dict | None):
        """Create a context manager that makes `values` the active section."""

        @contextmanager
        def section_context():
            self._section_stack.append((read_key(name), values or {}))
            try:
                yield
            finally:
                self._section_stack.pop()

        return section_context()

    @property
    def section(self) -> dict:
        """Get the active section values."""
        return self._section_stack[-1][1] if self._section_stack else {}

    def env_key(self, key: KeyValue) -> str:
        """Get the environment variable name for a key in the active section."""
        parts = [ENV_PREFIX]
        if self._section_stack and self._section_stack[-1][0]:
            parts.append(self._section_stack[-1][0])
        parts.append(read_key(key))
        return "_".join(parts).upper()

    def _read(
        self,
        key: KeyValue,
        default_value: T,
        cast: Callable[[Any], T],
        read_env: Callable[[str], T | None],
    ) -> T:
        name = read_key(key)
        if name in self.section and self.section[name] is not None:
            return cast(self.section[name])
        result = read_env(self.env_key(name))
        return default_value if result is None else result

    def str(self, key: KeyValue, default_value: str | None = None) -> str | None:
        """Read a string value."""
        return self._read(key, default_value, str, lambda k: self._env.str(k, None))

    def int(self, key: KeyValue, default_value: int) -> int:
        """Read an integer value."""
        return self._read(key, default_value, int, lambda k: self._env.int(k, None))

    def float(self, key: KeyValue, default_value: float | None) -> float | None:
        """Read a float value."""
        return self._read(
            key, default_value, float, lambda k: self._env.float(k, None)
        )

    def bool(self, key: KeyValue, default_value: bool) -> bool:
        """Read a boolean value."""
        return self._read(
            key, default_value, _as_bool, lambda k: self._env.bool(k, None)
        )

    def float_list(self, key: KeyValue, default_value: list[float]) -> list[float]:
        """Read a list of floats, either a YAML list or a comma-separated variable."""
        return self._read(
            key,
            default_value,
            lambda v: [float(x) for x in _as_list(v)],
            lambda k: self._env.list(k, None, subcast=float),
        )

    def str_list(self, key: KeyValue, default_value: list[str]) -> list[str]:
        """Read a list of strings, either a YAML list or a comma-separated variable."""
        return self._read(
            key,
            default_value,
            lambda v: [str(x) for x in _as_list(v)],
            lambda k: self._env.list(k, None),
        )


def _as_bool(value: Any) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in ("1", "true", "yes", "on")
    return bool(value)


def _as_list(value: Any) -> list:
    if isinstance(value, str):
        return [part.strip() for part in value.split(",") if part.strip()]
    return list(value)
