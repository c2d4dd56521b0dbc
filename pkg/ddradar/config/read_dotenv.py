# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Loading of DDRADAR_* overrides from a .env file."""

import logging
from pathlib import Path

from dotenv import dotenv_values, load_dotenv

log = logging.getLogger(__name__)


def read_dotenv(root: str | Path) -> list[str]:
    """Load `<root>/.env` into the environment; variables already set win.

    Returns the variable names the file defines.
    """
    env_path = Path(root) / ".env"
    if not env_path.is_file():
        log.debug("no .env file under %s", root)
        return []
    names = list(dotenv_values(env_path))
    load_dotenv(env_path, override=False)
    log.info("loaded %d variables from %s", len(names), env_path)
    return names
