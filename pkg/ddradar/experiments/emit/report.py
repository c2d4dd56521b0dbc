# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""JSON report writer."""

import json
import logging
from pathlib import Path
from typing import Any

log = logging.getLogger(__name__)


def write_report(root: str | Path, name: str, report: dict[str, Any]) -> Path:
    """Write a report as indented JSON with sorted keys."""
    path = Path(root) / f"{name}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    log.info("writing report %s", path)
    path.write_text(json.dumps(report, indent=4, sort_keys=True, ensure_ascii=False), encoding="utf-8")
    return path
