"""Regenerates the published tables from first principles and renders them.

Every cell is computed by the engine over the same row and column ranges as
the printed table. Cell text is the canonical ascii form (``t`` for tau);
the aligned-text renderer switches to ``τ``.
"""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from fibalg.engine.algebra import CENTRAL, AlgebraElement, parse_element, render_element
from fibalg.engine.chain import ChainSpec, point, qadd
from fibalg.engine.golden import ASCII_TAU, TAU_SYMBOL, GoldenRational, format_golden, parse_golden
from fibalg.engine.jordan import JordanSpec, jordan_product
from fibalg.engine.lie import (
    UNIT_WINDOW,
    CentralSign,
    LieAlgebraSpec,
    defect_chain_points,
    qclie_bracket,
    virasoro_bracket,
    witt_bracket,
)
from fibalg.engine.serialize import dumps
from fibalg.published import canonical_id, errata, get_published

log = logging.getLogger(__name__)

CHAIN_ALPHAS = ("1", "1/2", "0")
LIE_ROWS = range(-4, 5)
LIE_COLS = range(0, 8)
JORDAN_ROWS = range(-4, 5)
JORDAN_COLS = range(-2, 3)


@dataclass
class TableGrid:
    table_id: str
    title: str
    kind: str
    row_label: str
    col_label: str
    rows: List[str]
    cols: List[str]
    cells: List[List[str]]
    params: Dict[str, Any] = field(default_factory=dict)

    def cell(self, row: str, col: str) -> str:
        return self.cells[self.rows.index(row)][self.cols.index(col)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.table_id,
            "title": self.title,
            "kind": self.kind,
            "row_label": self.row_label,
            "col_label": self.col_label,
            "rows": list(self.rows),
            "cols": list(self.cols),
            "cells": [list(r) for r in self.cells],
            "params": dict(self.params),
        }


def _g(x: GoldenRational) -> str:
    return format_golden(x, ascii=True)


def _e(e: AlgebraElement) -> str:
    return render_element(e, ascii=True)


def _grid(table_id: str, row_keys: List[Any], col_keys: List[Any], cell: Callable[[Any, Any], str], label: Callable[[Any], str], **params: Any) -> TableGrid:
    meta = get_published(table_id)
    return TableGrid(
        table_id=table_id,
        title=meta["title"],
        kind=meta["kind"],
        row_label=meta["row_label"],
        col_label=meta["col_label"],
        rows=[label(r) for r in row_keys],
        cols=[label(c) for c in col_keys],
        cells=[[cell(r, c) for c in col_keys] for r in row_keys],
        params=params,
    )


def _chain_table() -> TableGrid:
    return _grid("1", list(CHAIN_ALPHAS), list(range(-4, 5)), lambda a, n: _g(point(ChainSpec(a), n).value), str, beta=0)


def _qadd_table() -> TableGrid:
    spec = ChainSpec()
    values = [point(spec, n).value for n in range(-3, 4)]
    return _grid("2", values, values, lambda x, y: _g(qadd(x, y)), _g, alpha="1", beta=0)


def _qclie_table() -> TableGrid:
    rows = defect_chain_points(GoldenRational(-2, -4), GoldenRational(2, 3))
    cols = defect_chain_points(GoldenRational(0), GoldenRational(2, 3))
    return _grid("3", rows, cols, lambda x, y: _e(qclie_bracket(x, y)), _g, window=UNIT_WINDOW.label)


def _lie_table(table_id: str, kind: str, alpha: str, central_sign: CentralSign) -> TableGrid:
    spec = LieAlgebraSpec(kind=kind, chain=ChainSpec(alpha), central_sign=central_sign)  # type: ignore[arg-type]
    product = virasoro_bracket if kind == "virasoro" else witt_bracket
    params: Dict[str, Any] = {"alpha": alpha, "beta": 0}
    if kind == "virasoro":
        params["central_sign"] = central_sign
    return _grid(table_id, list(LIE_ROWS), list(LIE_COLS), lambda m, n: _e(product(spec, m, n)), str, **params)


def _jordan_table() -> TableGrid:
    spec = JordanSpec(ChainSpec())
    return _grid("8", list(JORDAN_ROWS), list(JORDAN_COLS), lambda a, b: _e(jordan_product(spec, a, b)), str, alpha="1", beta=0)


def build_table(table_id: str, central_sign: CentralSign = "table") -> TableGrid:
    key = canonical_id(table_id)
    if key == "1":
        grid = _chain_table()
    elif key == "2":
        grid = _qadd_table()
    elif key == "3":
        grid = _qclie_table()
    elif key == "4":
        grid = _lie_table("4", "witt", "0", central_sign)
    elif key == "5":
        grid = _lie_table("5", "witt", "1", central_sign)
    elif key == "6":
        grid = _lie_table("6", "virasoro", "0", central_sign)
    elif key == "7":
        grid = _lie_table("7", "virasoro", "1", central_sign)
    else:
        grid = _jordan_table()
    log.info("table %s: %dx%d cells", key, len(grid.rows), len(grid.cols))
    return grid


# --- rendering -----------------------------------------------------------


def _corner(grid: TableGrid) -> str:
    return f"{grid.row_label}\\{grid.col_label}"


def render_text(grid: TableGrid) -> str:
    body = [[_corner(grid)] + grid.cols] + [[r] + cells for r, cells in zip(grid.rows, grid.cells)]
    body = [[c.replace(ASCII_TAU, TAU_SYMBOL) for c in line] for line in body]
    widths = [max(len(line[i]) for line in body) for i in range(len(body[0]))]
    lines = [grid.title]
    for line in body:
        lines.append("  ".join(c.rjust(w) for c, w in zip(line, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(grid: TableGrid) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([_corner(grid)] + grid.cols)
    for r, cells in zip(grid.rows, grid.cells):
        writer.writerow([r] + cells)
    return buf.getvalue()


def render_json(grid: TableGrid) -> str:
    return dumps(grid.to_dict()) + "\n"


RENDERERS: Dict[str, Callable[[TableGrid], str]] = {
    "text": render_text,
    "csv": render_csv,
    "json": render_json,
}


def render_table(grid: TableGrid, fmt: str) -> str:
    return RENDERERS[fmt](grid)


# --- comparison with the published cells ---------------------------------


def parse_cell(kind: str, text: str) -> Any:
    if kind in ("chain", "qadd"):
        return parse_golden(text)
    return parse_element(text, point_keys=kind == "qclie")


def _classify(kind: str, published: Any, computed: Any, erratum: Optional[Dict[str, str]], computed_text: str) -> str:
    if erratum is not None and erratum["computed"] == computed_text:
        return "erratum"
    if kind == "virasoro":
        c_pub, c_cmp = published.coeff(CENTRAL), computed.coeff(CENTRAL)
        if c_pub == -c_cmp and published.without(CENTRAL) == computed.without(CENTRAL):
            return "central_sign"
    return "mismatch"


def diff_table(table_id: str, central_sign: CentralSign = "table") -> List[Dict[str, str]]:
    """Cells where the regenerated table differs from the published one.

    Each entry is tagged ``erratum`` (a recorded misprint), ``central_sign``
    (only the sign of the C coefficient differs) or ``mismatch``.
    """
    published = get_published(table_id)
    grid = build_table(table_id, central_sign)
    kind = published["kind"]
    fixes = errata(published)
    out: List[Dict[str, str]] = []
    if published["rows"] != grid.rows or published["cols"] != grid.cols:
        out.append({"row": "*", "col": "*", "published": dumps([published["rows"], published["cols"]]), "computed": dumps([grid.rows, grid.cols]), "kind": "mismatch"})
        return out
    for i, row in enumerate(grid.rows):
        for j, col in enumerate(grid.cols):
            pub_text, cmp_text = published["cells"][i][j], grid.cells[i][j]
            pub, got = parse_cell(kind, pub_text), parse_cell(kind, cmp_text)
            if pub == got:
                continue
            out.append(
                {
                    "row": row,
                    "col": col,
                    "published": pub_text,
                    "computed": cmp_text,
                    "kind": _classify(kind, pub, got, fixes.get((row, col)), cmp_text),
                }
            )
    log.info("diff table %s (%s): %d differing cells", grid.table_id, central_sign, len(out))
    return out


def render_diff(entries: List[Dict[str, str]], fmt: str) -> str:
    if fmt == "json":
        return dumps(entries) + "\n"
    fields = ["row", "col", "published", "computed", "kind"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(entries)
        return buf.getvalue()
    if not entries:
        return "no differences\n"
    lines = []
    for e in entries:
        cells = {k: e[k].replace(ASCII_TAU, TAU_SYMBOL) for k in ("row", "col", "published", "computed")}
        lines.append(f"({cells['row']}, {cells['col']}) published {cells['published']} computed {cells['computed']} [{e['kind']}]")
    return "\n".join(lines) + "\n"
