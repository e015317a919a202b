"""Registry and loader for the published reference tables shipped as assets."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Tuple

from fibalg.engine.errors import FormatError, ParseError
from fibalg.resource_path import table_path

TABLE_VERSION = 1
TABLE_KINDS = ("chain", "qadd", "qclie", "witt", "virasoro", "jordan")

TABLE_REGISTRY = [
    {
        "id": "1",
        "name": "Chain elements",
        "description": "F_{alpha,0}(n) for alpha in {1, 1/2, 0}, n in [-4, 4].",
        "file": "table1_chains.json",
    },
    {
        "id": "2",
        "name": "Quasiaddition",
        "description": "x |- y over seven consecutive points of F_{1,0}.",
        "file": "table2_quasiaddition.json",
    },
    {
        "id": "3",
        "name": "Quasicrystal Lie algebra",
        "description": "[L_x, L_y] on the defect chain, including L_0.",
        "file": "table3_qclie.json",
    },
    {
        "id": "4",
        "name": "Aperiodic Witt, alpha = 0",
        "description": "[L_m, L_n] on F_{0,0}.",
        "file": "table4_witt_alpha0.json",
    },
    {
        "id": "5",
        "name": "Aperiodic Witt, alpha = 1",
        "description": "[L_m, L_n] on F_{1,0}.",
        "file": "table5_witt_alpha1.json",
    },
    {
        "id": "6",
        "name": "Aperiodic Virasoro, alpha = 0",
        "description": "[L_m, L_n] with central term on F_{0,0}.",
        "file": "table6_virasoro_alpha0.json",
    },
    {
        "id": "7",
        "name": "Aperiodic Virasoro, alpha = 1",
        "description": "[L_m, L_n] with central term on F_{1,0}.",
        "file": "table7_virasoro_alpha1.json",
    },
    {
        "id": "8",
        "name": "Aperiodic Jordan algebra",
        "description": "L_a o L_b on F_{1,0}.",
        "file": "table8_jordan.json",
    },
]

TABLE_ALIASES = {"jordan": "8"}


def canonical_id(table_id: str) -> str:
    key = str(table_id).strip().lower()
    key = TABLE_ALIASES.get(key, key)
    if not any(t["id"] == key for t in TABLE_REGISTRY):
        raise ParseError("unknown table", {"table": table_id, "allowed": table_ids()})
    return key


def table_ids() -> List[str]:
    return [t["id"] for t in TABLE_REGISTRY] + sorted(TABLE_ALIASES)


def load_table_file(path: Path) -> Dict[str, Any]:
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError("table file not found", {"path": str(path)}) from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise FormatError("table json invalid", {"path": str(path), "error": str(exc)}) from exc
    return data


def get_published(table_id: str) -> Dict[str, Any]:
    key = canonical_id(table_id)
    entry = next(t for t in TABLE_REGISTRY if t["id"] == key)
    return validate_table_data(load_table_file(table_path(entry["file"])))


def table_meta(table_id: str) -> Dict[str, Any]:
    key = canonical_id(table_id)
    entry = next(t for t in TABLE_REGISTRY if t["id"] == key)
    aliases = sorted(a for a, target in TABLE_ALIASES.items() if target == key)
    return {"id": key, "name": entry["name"], "description": entry["description"], "aliases": aliases}


def list_tables() -> List[Dict[str, Any]]:
    return [table_meta(t["id"]) for t in TABLE_REGISTRY]


def errata(data: Dict[str, Any]) -> Dict[Tuple[str, str], Dict[str, str]]:
    """Known misprints keyed by (row label, column label)."""
    return {(e["row"], e["col"]): e for e in data.get("errata", [])}


def validate_table_data(data: Dict[str, Any]) -> Dict[str, Any]:
    if not isinstance(data, dict):
        raise FormatError("table must be object")
    version = int(data.get("version", TABLE_VERSION))
    if version != TABLE_VERSION:
        raise FormatError("unsupported table version", {"version": version})
    kind = data.get("kind")
    if kind not in TABLE_KINDS:
        raise FormatError("unknown table kind", {"kind": kind})
    rows = data.get("rows")
    cols = data.get("cols")
    cells = data.get("cells")
    for name, value in (("rows", rows), ("cols", cols)):
        if not isinstance(value, list) or not value:
            raise FormatError(f"{name} must be non-empty list")
        if not all(isinstance(v, str) for v in value):
            raise FormatError(f"{name} must be list[str]")
    if not isinstance(cells, list) or len(cells) != len(rows):
        raise FormatError("cells must have one row per row label", {"rows": len(rows or [])})
    for idx, row in enumerate(cells):
        if not isinstance(row, list) or len(row) != len(cols):
            raise FormatError("cell row has wrong width", {"index": idx, "width": len(cols)})
        if not all(isinstance(c, str) for c in row):
            raise FormatError("cells must be strings", {"index": idx})
    if kind != "qclie" and not isinstance(data.get("beta", 0), int):
        raise FormatError("beta must be int")
    for idx, e in enumerate(data.get("errata", [])):
        if not isinstance(e, dict) or not {"row", "col", "published", "computed"} <= set(e):
            raise FormatError("erratum needs row, col, published, computed", {"index": idx})
    return data
