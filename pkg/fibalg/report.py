from __future__ import annotations

from typing import Any, Dict, List, Optional

from fibalg.engine.errors import AlgebraError
from fibalg.engine.serialize import dumps

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2


def error_doc(code: str, message: str, details: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    return {"error": {"code": code, "message": message, "details": details or {}}}


def from_exception(exc: Exception) -> Dict[str, Any]:
    if isinstance(exc, AlgebraError):
        return {"error": exc.to_dict()}
    if isinstance(exc, OSError):
        return error_doc("io_error", str(exc), {"filename": exc.filename} if exc.filename else None)
    return error_doc("internal", str(exc), {"type": type(exc).__name__})


def render_error(exc: Exception) -> str:
    return dumps(from_exception(exc)) + "\n"


def verdict_exit_code(verdicts: List[Dict[str, Any]]) -> int:
    return EXIT_UNEXPECTED if any(v.get("unexpected") for v in verdicts) else EXIT_OK


def render_verdict_text(verdict: Dict[str, Any]) -> str:
    status = "UNEXPECTED" if verdict["unexpected"] else "ok"
    lines = [
        f"suite: {verdict['suite']}",
        f"params: {dumps(verdict['params'])}",
        f"checked: {verdict['checked']}",
        f"violations: {len(verdict['violations'])} (expected {verdict['expected']})",
        f"status: {status}",
    ]
    for v in verdict["violations"][:20]:
        lines.append(f"  [{v['code']}] {v['message']} {dumps(v['details'])}")
    if len(verdict["violations"]) > 20:
        lines.append(f"  ... {len(verdict['violations']) - 20} more")
    if "report" in verdict:
        lines.append(f"report: {dumps(verdict['report'])}")
    return "\n".join(lines) + "\n"
