from __future__ import annotations

import json
from typing import Any, Dict, Iterable, List

from fibalg.engine.algebra import CENTRAL, AlgebraElement, BasisKey, Central, ChainIndex, Point
from fibalg.engine.chain import ChainSpec
from fibalg.engine.errors import AlgebraError, FormatError
from fibalg.engine.golden import GoldenRational, format_golden, format_rational, parse_golden, parse_rational
from fibalg.engine.jordan import TRUNCATION_MODES, StructureConstantTable, symmetric_entries

CSV_HEADER = ["i", "j", "k", "p", "q", "d"]


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def golden_to_dict(x: GoldenRational) -> Dict[str, int]:
    return {"p": x.p, "q": x.q, "d": x.d}


def golden_from_dict(d: Dict[str, Any]) -> GoldenRational:
    try:
        return GoldenRational(int(d["p"]), int(d.get("q", 0)), int(d.get("d", 1)))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError("bad golden number", {"value": repr(d)}) from exc


def key_to_dict(key: BasisKey) -> Dict[str, Any]:
    if isinstance(key, Central):
        return {"central": True}
    if isinstance(key, ChainIndex):
        return {"n": key.n}
    return {"point": format_golden(key.x, ascii=True)}


def key_from_dict(d: Dict[str, Any]) -> BasisKey:
    if d.get("central"):
        return CENTRAL
    if "n" in d:
        return ChainIndex(int(d["n"]))
    if "point" in d:
        return Point(parse_golden(str(d["point"])))
    raise FormatError("unknown generator key", {"key": repr(d)})


def element_to_list(e: AlgebraElement) -> List[Dict[str, Any]]:
    return [{"key": key_to_dict(k), "coeff": golden_to_dict(c)} for k, c in e.terms]


def element_from_list(items: Iterable[Dict[str, Any]]) -> AlgebraElement:
    return AlgebraElement.from_terms((key_from_dict(t["key"]), golden_from_dict(t["coeff"])) for t in items)


def chain_to_dict(spec: ChainSpec) -> Dict[str, Any]:
    return {"alpha": format_rational(spec.alpha), "beta": spec.beta}


def chain_from_dict(d: Dict[str, Any]) -> ChainSpec:
    return ChainSpec(parse_rational(str(d.get("alpha", "1"))), int(d.get("beta", 0)))


def table_to_dict(table: StructureConstantTable) -> Dict[str, Any]:
    return {
        "algebra": "jordan",
        "alpha": format_rational(table.chain.alpha),
        "beta": table.chain.beta,
        "N": table.n_max,
        "mode": table.mode,
        "basis": table.basis,
        "constants": [{"i": i, "j": j, "k": k, "value": golden_to_dict(v)} for i, j, k, v in table.upper()],
    }


def table_from_dict(d: Dict[str, Any]) -> StructureConstantTable:
    if d.get("algebra") != "jordan":
        raise FormatError("not a Jordan structure-constant table", {"algebra": d.get("algebra")})
    mode = d.get("mode")
    if mode not in TRUNCATION_MODES:
        raise FormatError("unknown truncation mode", {"mode": mode})
    try:
        chain = chain_from_dict(d)
        n_max = int(d["N"])
        upper = []
        for c in d.get("constants", []):
            i, j, k = int(c["i"]), int(c["j"]), int(c["k"])
            if j > k:
                raise FormatError("constants must be listed with j <= k", {"entry": c})
            upper.append((i, j, k, golden_from_dict(c["value"])))
    except FormatError:
        raise
    except (AlgebraError, KeyError, TypeError, ValueError) as exc:
        raise FormatError("malformed structure-constant table", {"error": str(exc)}) from exc
    return StructureConstantTable(chain, n_max, mode, symmetric_entries(upper))


def table_to_csv_rows(table: StructureConstantTable) -> List[List[str]]:
    rows = [list(CSV_HEADER)]
    for i, j, k, v in table.upper():
        rows.append([str(i), str(j), str(k), str(v.p), str(v.q), str(v.d)])
    return rows


def table_from_csv_rows(rows: List[List[str]], chain: ChainSpec, n_max: int, mode: str) -> StructureConstantTable:
    if not rows or rows[0] != CSV_HEADER:
        raise FormatError("missing CSV header", {"expected": CSV_HEADER})
    if mode not in TRUNCATION_MODES:
        raise FormatError("unknown truncation mode", {"mode": mode})
    upper = []
    for row in rows[1:]:
        try:
            i, j, k, p, q, d = (int(x) for x in row)
        except ValueError as exc:
            raise FormatError("non-integer CSV field", {"row": row}) from exc
        upper.append((i, j, k, GoldenRational(p, q, d)))
    return StructureConstantTable(chain, n_max, mode, symmetric_entries(upper))  # type: ignore[arg-type]
