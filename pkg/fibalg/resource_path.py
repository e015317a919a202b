"""Locates the bundled table assets, in a source tree or a frozen bundle."""
from __future__ import annotations

import os
import sys
from pathlib import Path
from typing import Mapping, Optional

TABLES_ENV = "FIBALG_TABLES_DIR"
ASSETS_REL = Path("fibalg") / "assets" / "tables"


def package_root() -> Path:
    frozen = getattr(sys, "_MEIPASS", None)
    if frozen:
        return Path(frozen)
    return Path(__file__).resolve().parents[1]


def tables_dir(environ: Optional[Mapping[str, str]] = None) -> Path:
    env = os.environ if environ is None else environ
    override = env.get(TABLES_ENV)
    if override:
        return Path(override).expanduser()
    return package_root() / ASSETS_REL


def table_path(filename: str, environ: Optional[Mapping[str, str]] = None) -> Path:
    return tables_dir(environ) / filename
