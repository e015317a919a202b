"""Command-line surface for the Fibonacci-chain algebras.

Usage:
    python -m fibalg chain --alpha 1/2 --from -4 --to 4
    python -m fibalg table 5 --format csv
    python -m fibalg verify jacobi --alpha 0 --range 15
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from fibalg.config import LOG_LEVELS, OUTPUT_FORMATS, RunConfig, configure_logging
from fibalg.engine.algebra import AlgebraElement, ChainIndex, Point, render_element
from fibalg.engine.chain import ChainSpec, chain_range, index_of, membership, qadd, qadd_index
from fibalg.engine.errors import AlgebraError, ParseError
from fibalg.engine.golden import ASCII_TAU, TAU_SYMBOL, format_golden, parse_golden, parse_rational
from fibalg.engine.jordan import (
    TRUNCATION_MODES,
    JordanSpec,
    TruncationSpec,
    export_structure_constants,
    jordan_keys,
    truncated_product,
)
from fibalg.engine.lie import ALGEBRA_KINDS, CENTRAL_SIGNS, ClosedWindow, LieAlgebraSpec, bracket_keys
from fibalg.engine.serialize import dumps, element_to_list, table_to_csv_rows, table_to_dict
from fibalg.published import list_tables, table_ids
from fibalg.report import EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE, render_error, render_verdict_text, verdict_exit_code
from fibalg.tables import build_table, diff_table, render_diff, render_table
from fibalg.verify import VerifyParams, run_suite, suite_names

log = logging.getLogger(__name__)

DEFAULT_CHAIN_RANGE = 10
DEFAULT_EXPORT_N = 6


def _common_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format (default from FIBALG_FORMAT, else text)")
    p.add_argument("--log-level", choices=LOG_LEVELS, default=None, help="Logging level for stderr diagnostics")
    return p


def _chain_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--alpha", default="1", help="Rational shift alpha, e.g. 1, 1/2, 0 (no decimals)")
    p.add_argument("--beta", type=int, default=0, help="Integer shift beta")
    return p


def _range_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--range", type=int, default=None, help="Symmetric index range [-R, R]")
    p.add_argument("--from", dest="lo", type=int, default=None, help="Lower index (overrides --range)")
    p.add_argument("--to", dest="hi", type=int, default=None, help="Upper index (overrides --range)")
    return p


def _lie_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algebra", choices=ALGEBRA_KINDS, default="witt", help="Lie algebra family")
    p.add_argument("--central-sign", choices=CENTRAL_SIGNS, default=None, help="Virasoro central term convention")
    p.add_argument("--falsify", action="store_true", help="Allow windows that fail the Lie validity condition")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibalg",
        description="Exact arithmetic on Fibonacci-chain quasicrystals and their Lie and Jordan algebras",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    # Chain points and quasiaddition:
    python -m fibalg chain --alpha 1 --from -4 --to 4
    python -m fibalg qadd 1+t 2+2t

    # Products (use -- before negative point values such as -1-3t):
    python -m fibalg bracket 2 -3 --algebra virasoro --alpha 0
    python -m fibalg jordan -4 -2 --alpha 1

    # Published tables and verification suites:
    python -m fibalg table 7 --central-sign equation --diff
    python -m fibalg verify jacobi --alpha 1/2 --range 15 --falsify
    python -m fibalg export-sc --N 6 --mode zero-product --out sc.json

Exit status: 0 when every outcome matches the theory (expected
falsifications included), 1 on an unexpected violation, 2 on a usage or
precondition error.
        """,
    )
    common = _common_parent()
    chain = _chain_parent()
    ranged = _range_parent()
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chain", parents=[common, chain, ranged], help="List chain points F(n)")
    p.set_defaults(handler=cmd_chain)

    p = sub.add_parser("qadd", parents=[common, chain], help="Quasiaddition x |- y")
    p.add_argument("x", help="Left operand (a+bt) or index with --index")
    p.add_argument("y", help="Right operand (a+bt) or index with --index")
    p.add_argument("--index", action="store_true", help="Operands are chain indices")
    p.set_defaults(handler=cmd_qadd)

    p = sub.add_parser("bracket", parents=[common, chain], help="Lie bracket of two generators")
    p.add_argument("a", help="Index (witt, virasoro) or point a+bt (qclie)")
    p.add_argument("b", help="Index (witt, virasoro) or point a+bt (qclie)")
    _lie_options(p)
    p.add_argument("--window-low", default="0", help="QCLie window lower bound")
    p.add_argument("--window-high", default="1", help="QCLie window upper bound")
    p.set_defaults(handler=cmd_bracket)

    p = sub.add_parser("jordan", parents=[common, chain], help="Jordan product of two generators")
    p.add_argument("a", help="Index, or point with --points")
    p.add_argument("b", help="Index, or point with --points")
    p.add_argument("--points", action="store_true", help="Operands are chain points")
    p.add_argument("--N", dest="n_max", type=int, default=None, help="Truncate to |n| <= N")
    p.add_argument("--mode", choices=TRUNCATION_MODES, default="zero-product", help="Truncation mode")
    p.set_defaults(handler=cmd_jordan)

    p = sub.add_parser("table", parents=[common], help="Regenerate a published table")
    p.add_argument("table_id", nargs="?", help="1..8 or 'jordan'")
    p.add_argument("--list", action="store_true", help="List the published tables and exit")
    p.add_argument("--central-sign", choices=CENTRAL_SIGNS, default=None, help="Virasoro central term convention")
    p.add_argument("--diff", action="store_true", help="List cells that differ from the published table")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify", parents=[common, chain, ranged], help="Run a verification suite")
    p.add_argument("suite", help=", ".join(suite_names()))
    _lie_options(p)
    p.add_argument("--N", dest="n_max", type=int, default=None, help="Generator window for ideal and truncation suites")
    p.add_argument("--M", dest="m_max", type=int, default=4, help="Constraint window for no-identity")
    p.add_argument("--mode", choices=TRUNCATION_MODES, default="zero-product", help="Truncation mode")
    p.add_argument("--c", default="1/2", help="Sub-window start for abelian and ideal suites")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("export-sc", parents=[common, chain], help="Export truncated Jordan structure constants")
    p.add_argument("--N", dest="n_max", type=int, default=DEFAULT_EXPORT_N, help="Truncate to |n| <= N")
    p.add_argument("--mode", choices=TRUNCATION_MODES, default="zero-product", help="Truncation mode")
    p.add_argument("--out", type=Path, default=None, help="Write to this file instead of stdout")
    p.set_defaults(handler=cmd_export)

    return parser


# --- helpers -------------------------------------------------------------


def _chain(args: argparse.Namespace) -> ChainSpec:
    return ChainSpec(parse_rational(args.alpha), args.beta)


def _int(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError("expected an integer", {name: text}) from None


def _bounds(args: argparse.Namespace, default_range: int) -> Tuple[int, int]:
    r = default_range if args.range is None else args.range
    lo = -r if args.lo is None else args.lo
    hi = r if args.hi is None else args.hi
    return lo, hi


def _tau(text: str) -> str:
    return text.replace(ASCII_TAU, TAU_SYMBOL)


def _csv(rows: List[List[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit_element(fmt: str, fields: Dict[str, Any], value: AlgebraElement) -> str:
    text = render_element(value, ascii=True)
    if fmt == "json":
        return dumps({**fields, "value": text, "terms": element_to_list(value)}) + "\n"
    if fmt == "csv":
        return _csv([list(fields) + ["value"], [str(v) for v in fields.values()] + [text]])
    return _tau(text) + "\n"


# --- commands ------------------------------------------------------------


def cmd_chain(args: argparse.Namespace, cfg: RunConfig) -> int:
    spec = _chain(args)
    lo, hi = _bounds(args, DEFAULT_CHAIN_RANGE)
    points = chain_range(spec, lo, hi)
    fmt = cfg.output_format
    if fmt == "json":
        doc = {
            "chain": spec.label,
            "window": [format_golden(spec.window_low, ascii=True), format_golden(spec.window_high, ascii=True)],
            "points": [{"n": p.index, "value": format_golden(p.value, ascii=True)} for p in points],
        }
        sys.stdout.write(dumps(doc) + "\n")
    elif fmt == "csv":
        sys.stdout.write(_csv([["n", "value", "int_part"]] + [[p.index, format_golden(p.value, ascii=True), p.int_part] for p in points]))
    else:
        width = max(len(str(p.index)) for p in points)
        lines = [spec.label] + [f"{str(p.index).rjust(width)}  {format_golden(p.value)}" for p in points]
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_qadd(args: argparse.Namespace, cfg: RunConfig) -> int:
    spec = _chain(args)
    if args.index:
        n, m = _int(args.x, "x"), _int(args.y, "y")
        fields: Dict[str, Any] = {"n": n, "m": m, "index": qadd_index(spec, n, m)}
    else:
        x, y = parse_golden(args.x), parse_golden(args.y)
        value = qadd(x, y)
        index = None
        if value.is_dirichlet_integer and membership(spec, value):
            index = index_of(spec, value)
        fields = {
            "x": format_golden(x, ascii=True),
            "y": format_golden(y, ascii=True),
            "value": format_golden(value, ascii=True),
            "chain": spec.label,
            "index": index,
        }
    fmt = cfg.output_format
    if fmt == "json":
        sys.stdout.write(dumps(fields) + "\n")
    elif fmt == "csv":
        sys.stdout.write(_csv([list(fields), ["" if v is None else v for v in fields.values()]]))
    elif args.index:
        sys.stdout.write(f"{fields['n']} |- {fields['m']} = {fields['index']}\n")
    else:
        sys.stdout.write(_tau(f"{fields['x']} |- {fields['y']} = {fields['value']}") + "\n")
    return EXIT_OK


def cmd_bracket(args: argparse.Namespace, cfg: RunConfig) -> int:
    window = ClosedWindow(parse_rational(args.window_low), parse_rational(args.window_high))
    spec = LieAlgebraSpec(
        kind=args.algebra,
        chain=_chain(args),
        window=window,
        central_sign=args.central_sign or cfg.central_sign,
        falsify=args.falsify,
    )
    if spec.kind == "qclie":
        a, b = Point(parse_golden(args.a)), Point(parse_golden(args.b))
        fields: Dict[str, Any] = {"algebra": spec.kind, "window": window.label, "a": format_golden(a.x, ascii=True), "b": format_golden(b.x, ascii=True)}
        value = bracket_keys(spec, a, b)
    else:
        n, m = _int(args.a, "a"), _int(args.b, "b")
        fields = {"algebra": spec.kind, "chain": spec.chain.label, "a": n, "b": m}
        value = bracket_keys(spec, ChainIndex(n), ChainIndex(m))
    sys.stdout.write(_emit_element(cfg.output_format, fields, value))
    return EXIT_OK


def cmd_jordan(args: argparse.Namespace, cfg: RunConfig) -> int:
    chain = _chain(args)
    if args.points:
        x, y = parse_golden(args.a), parse_golden(args.b)
        fields: Dict[str, Any] = {"chain": chain.label, "a": format_golden(x, ascii=True), "b": format_golden(y, ascii=True)}
        value = jordan_keys(JordanSpec(chain), Point(x), Point(y))
    else:
        n, m = _int(args.a, "a"), _int(args.b, "b")
        fields = {"chain": chain.label, "a": n, "b": m}
        if args.n_max is None:
            value = jordan_keys(JordanSpec(chain), ChainIndex(n), ChainIndex(m))
        else:
            fields.update({"N": args.n_max, "mode": args.mode})
            value = truncated_product(TruncationSpec(chain, args.n_max, args.mode), n, m)
    sys.stdout.write(_emit_element(cfg.output_format, fields, value))
    return EXIT_OK


def _render_listing(tables: List[Dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return dumps(tables) + "\n"
    if fmt == "csv":
        rows = [[t["id"], t["name"], " ".join(t["aliases"]), t["description"]] for t in tables]
        return _csv([["id", "name", "aliases", "description"]] + rows)
    lines: List[str] = []
    for t in tables:
        names = ", ".join(t["aliases"])
        alias = f" ({names})" if names else ""
        lines.append(f"{t['id']}  {t['name']}{alias}: {t['description']}")
    return "\n".join(lines) + "\n"


def cmd_table(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.list:
        sys.stdout.write(_render_listing(list_tables(), cfg.output_format))
        return EXIT_OK
    if args.table_id is None:
        raise ParseError("table id required", {"allowed": table_ids()})
    sign = args.central_sign or cfg.central_sign
    if args.diff:
        entries = diff_table(args.table_id, sign)
        sys.stdout.write(render_diff(entries, cfg.output_format))
        return EXIT_UNEXPECTED if any(e["kind"] == "mismatch" for e in entries) else EXIT_OK
    sys.stdout.write(render_table(build_table(args.table_id, sign), cfg.output_format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    params = VerifyParams(
        alpha=parse_rational(args.alpha),
        beta=args.beta,
        range=cfg.verify_range if args.range is None else args.range,
        lo=args.lo,
        hi=args.hi,
        algebra=args.algebra,
        central_sign=args.central_sign or cfg.central_sign,
        falsify=args.falsify,
        n_max=cfg.ideal_n if args.n_max is None else args.n_max,
        m_max=args.m_max,
        mode=args.mode,
        c=parse_rational(args.c),
    )
    verdict = run_suite(args.suite, params)
    # verdicts are JSON unless text is asked for on the command line
    if args.format == "text":
        sys.stdout.write(render_verdict_text(verdict))
    else:
        sys.stdout.write(dumps(verdict) + "\n")
    return verdict_exit_code([verdict])


def cmd_export(args: argparse.Namespace, cfg: RunConfig) -> int:
    table = export_structure_constants(TruncationSpec(_chain(args), args.n_max, args.mode))
    if cfg.output_format == "csv":
        body = _csv(table_to_csv_rows(table))
    else:
        body = dumps(table_to_dict(table)) + "\n"
    if args.out is None:
        sys.stdout.write(body)
    else:
        args.out.write_text(body, encoding="utf-8")
        log.info("wrote %d constants to %s", len(table.upper()), args.out)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_env().with_overrides(output_format=args.format, log_level=args.log_level)
        configure_logging(cfg.log_level)
        return int(args.handler(args, cfg))
    except (AlgebraError, OSError) as exc:
        sys.stderr.write(render_error(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
