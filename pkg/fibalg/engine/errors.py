from __future__ import annotations

from typing import Any, Dict, Optional


class AlgebraError(Exception):
    code = "algebra_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None, code: Optional[str] = None):
        super().__init__(message)
        if code is not None:
            self.code = code
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": dict(self.details)}


class ParseError(AlgebraError):
    code = "parse_error"


class NotDirichletInteger(AlgebraError):
    code = "not_dirichlet_integer"


class NotInChain(AlgebraError):
    code = "not_in_chain"


class UnexpectedGap(AlgebraError):
    code = "unexpected_gap"


class IndexOutsideWindow(AlgebraError):
    code = "index_outside_window"


class InvalidWindow(AlgebraError):
    code = "invalid_window"


class PreconditionError(AlgebraError):
    code = "precondition"


class UnknownSuite(AlgebraError):
    code = "unknown_suite"


class FormatError(AlgebraError):
    code = "format_error"
