"""Named verification suites driving the engine's check_* operations.

Each suite returns a verdict ``{suite, params, checked, violations, elapsed,
expected, unexpected}``. ``expected`` says what the theory predicts:
``none`` (any violation is a defect), ``some`` (a falsification run, where a
violation is the finding) or ``report`` (the outcome is recorded only).
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from fibalg.engine.chain import (
    ChainSpec,
    Violation,
    check_chain_equivalence,
    check_closure,
    check_gap_word,
    check_palindrome,
    check_qadd_index,
    check_quasiaddition,
    violation,
)
from fibalg.engine.errors import PreconditionError, UnknownSuite
from fibalg.engine.golden import format_rational, parse_rational
from fibalg.engine.jordan import (
    JordanSpec,
    TruncationMode,
    TruncationSpec,
    check_commutativity,
    check_idempotence,
    check_jordan_identity,
    check_no_identity,
    check_proper_ideal,
    check_sum_rule,
    check_truncated_axioms,
    zero_map_directions,
)
from fibalg.engine.lie import (
    UNIT_WINDOW,
    AlgebraKind,
    CentralSign,
    ClosedWindow,
    LieAlgebraSpec,
    abelian_witnesses,
    check_antisymmetry,
    check_chi_factorization,
    check_jacobi,
    check_reflection_symmetry,
    closed_window_points,
    generator_keys,
    ideal_leaks,
)

log = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class VerifyParams:
    alpha: Fraction = Fraction(1)
    beta: int = 0
    range: int = 15
    lo: Optional[int] = None
    hi: Optional[int] = None
    algebra: AlgebraKind = "witt"
    central_sign: CentralSign = "table"
    falsify: bool = False
    n_max: int = 12
    m_max: int = 4
    mode: TruncationMode = "zero-product"
    c: Fraction = HALF

    def __post_init__(self) -> None:
        for name in ("alpha", "c"):
            value = getattr(self, name)
            if isinstance(value, str):
                value = parse_rational(value)
            object.__setattr__(self, name, Fraction(value))
        if self.range < 0:
            raise PreconditionError("range must be non-negative", {"range": self.range})

    @property
    def bounds(self) -> Tuple[int, int]:
        lo = -self.range if self.lo is None else self.lo
        hi = self.range if self.hi is None else self.hi
        if lo > hi:
            raise PreconditionError("empty range", {"lo": lo, "hi": hi})
        return lo, hi

    @property
    def chain(self) -> ChainSpec:
        return ChainSpec(self.alpha, self.beta)

    @property
    def lie(self) -> LieAlgebraSpec:
        return LieAlgebraSpec(kind=self.algebra, chain=self.chain, central_sign=self.central_sign, falsify=self.falsify)

    @property
    def jordan(self) -> JordanSpec:
        return JordanSpec(self.chain)

    @property
    def truncation(self) -> TruncationSpec:
        return TruncationSpec(self.chain, self.n_max, self.mode)

    def to_dict(self) -> Dict[str, Any]:
        lo, hi = self.bounds
        return {
            "alpha": format_rational(self.alpha),
            "beta": self.beta,
            "lo": lo,
            "hi": hi,
            "algebra": self.algebra,
            "central_sign": self.central_sign,
            "falsify": self.falsify,
            "N": self.n_max,
            "M": self.m_max,
            "mode": self.mode,
            "c": format_rational(self.c),
        }


# Each runner returns (violations, checked, expected, extra).
SuiteResult = Tuple[List[Violation], int, str, Dict[str, Any]]
Runner = Callable[[VerifyParams], SuiteResult]


def _width(p: VerifyParams) -> int:
    lo, hi = p.bounds
    return hi - lo + 1


def _lie_expected(p: VerifyParams) -> str:
    spec = p.lie
    if not spec.is_valid:
        return "some"
    return "report" if spec.kind == "virasoro" else "none"


def _jacobi(p: VerifyParams) -> SuiteResult:
    spec = p.lie
    n = len(generator_keys(spec, *p.bounds))
    return check_jacobi(spec, *p.bounds), n**3, _lie_expected(p), {"valid": spec.is_valid}


def _antisymmetry(p: VerifyParams) -> SuiteResult:
    spec = p.lie
    n = len(generator_keys(spec, *p.bounds))
    return check_antisymmetry(spec, *p.bounds), n**2, "none", {"valid": spec.is_valid}


def _jordan_identity(p: VerifyParams) -> SuiteResult:
    return check_jordan_identity(p.jordan, *p.bounds), _width(p) ** 2, "none", {}


def _quasiadd(p: VerifyParams) -> SuiteResult:
    return check_quasiaddition(p.chain, *p.bounds), _width(p) ** 3, "none", {}


def _closure(p: VerifyParams) -> SuiteResult:
    return check_closure(p.chain, *p.bounds), _width(p) ** 2, "none", {}


def _qadd_index(p: VerifyParams) -> SuiteResult:
    return check_qadd_index(p.chain, *p.bounds), _width(p) ** 2, "none", {}


def _sum_rule(p: VerifyParams) -> SuiteResult:
    return check_sum_rule(p.jordan, *p.bounds), _width(p) ** 2, "none", {}


def _commutativity(p: VerifyParams) -> SuiteResult:
    return check_commutativity(p.jordan, *p.bounds), _width(p) ** 2, "none", {}


def _idempotence(p: VerifyParams) -> SuiteResult:
    return check_idempotence(p.jordan, *p.bounds), _width(p), "none", {}


def _monotone(p: VerifyParams) -> SuiteResult:
    dirs = zero_map_directions(p.jordan, *p.bounds)
    fails = [violation("not_monotone", "zero map is not strictly monotone", map=name) for name, d in sorted(dirs.items()) if d is None]
    return fails, 2 * _width(p), "none", {"directions": dirs}


def _abelian(p: VerifyParams) -> SuiteResult:
    lo, hi = p.bounds
    fails = abelian_witnesses(p.c, lo, hi)
    n = len(closed_window_points(ClosedWindow(p.c, Fraction(1)), lo, hi))
    expected = "none" if p.c >= HALF else "some"
    return fails, n**2, expected, {}


def _ideal(p: VerifyParams) -> SuiteResult:
    lo, hi = p.bounds
    fails = ideal_leaks(p.c, lo, hi)
    inner = closed_window_points(ClosedWindow(p.c, Fraction(1)), lo, hi)
    return fails, len(inner) * len(closed_window_points(UNIT_WINDOW, lo, hi)), "none", {}


def _chi_factorization(p: VerifyParams) -> SuiteResult:
    points = closed_window_points(UNIT_WINDOW, *p.bounds)
    return check_chi_factorization(UNIT_WINDOW, points), len(points) ** 3, "none", {}


def _reflection(p: VerifyParams) -> SuiteResult:
    points = closed_window_points(UNIT_WINDOW, *p.bounds)
    return check_reflection_symmetry(*p.bounds), len(points), "none", {}


def _palindrome(p: VerifyParams) -> SuiteResult:
    symmetric = p.alpha + p.beta == HALF
    return check_palindrome(p.chain, *p.bounds), _width(p), "none" if symmetric else "report", {}


def _no_identity(p: VerifyParams) -> SuiteResult:
    absent = check_no_identity(p.jordan, p.n_max, p.m_max)
    fails = [] if absent else [violation("identity_found", "a finite sum of generators acts as identity", N=p.n_max, M=p.m_max)]
    return fails, 2 * p.n_max + 1, "none", {"identity_absent": absent}


def _proper_ideal(p: VerifyParams) -> SuiteResult:
    proper = check_proper_ideal(p.jordan, p.n_max)
    fails = [] if proper else [violation("not_proper", "L_1 lies in the span of L_0 o L_n", N=p.n_max)]
    expected = "none" if p.chain == ChainSpec() else "report"
    return fails, 2 * p.n_max + 1, expected, {"proper": proper}


def _truncated_axioms(p: VerifyParams) -> SuiteResult:
    report = check_truncated_axioms(p.truncation)
    summary = {"commutative": report.commutative, "jordan_identity": report.jordan_identity}
    return report.witnesses, report.checked_pairs, "report", summary


def _chain_equivalence(p: VerifyParams) -> SuiteResult:
    bound = p.range
    return check_chain_equivalence(p.chain, bound), (2 * bound + 1) ** 2, "none", {"bound": bound}


def _gap_word(p: VerifyParams) -> SuiteResult:
    report = check_gap_word(p.chain)
    fails: List[Violation] = []
    if not report["factor_found"]:
        fails.append(violation("not_a_factor", "gap word is not a factor of the substitution word", word=report["word"]))
    if not report["ratio_within_tolerance"]:
        fails.append(violation("ratio", "#A/#B is not within tolerance of tau", ratio=report["ratio"], error=report["ratio_error"]))
    return fails, report["count_a"] + report["count_b"], "none", report


SUITES: Dict[str, Runner] = {
    "jacobi": _jacobi,
    "antisymmetry": _antisymmetry,
    "jordan-identity": _jordan_identity,
    "quasiadd": _quasiadd,
    "closure": _closure,
    "sum-rule": _sum_rule,
    "abelian": _abelian,
    "ideal": _ideal,
    "no-identity": _no_identity,
    "proper-ideal": _proper_ideal,
    "truncated-axioms": _truncated_axioms,
    "chain-equivalence": _chain_equivalence,
    "gap-word": _gap_word,
    "chi-factorization": _chi_factorization,
    "reflection": _reflection,
    "palindrome": _palindrome,
    "qadd-index": _qadd_index,
    "commutativity": _commutativity,
    "idempotence": _idempotence,
    "monotone": _monotone,
}


def suite_names() -> List[str]:
    return list(SUITES)


def is_unexpected(expected: str, violations: List[Violation], suite: str) -> bool:
    if expected == "none":
        return bool(violations)
    if suite == "truncated-axioms":
        # commutativity is predicted for both truncation modes
        return any(v["code"] == "commutativity" for v in violations)
    return False


def run_suite(name: str, params: Optional[VerifyParams] = None) -> Dict[str, Any]:
    runner = SUITES.get(name)
    if runner is None:
        raise UnknownSuite("unknown verification suite", {"suite": name, "allowed": suite_names()})
    p = params or VerifyParams()
    log.info("verify %s %s", name, p.to_dict())
    start = time.perf_counter()
    violations, checked, expected, extra = runner(p)
    elapsed = time.perf_counter() - start
    unexpected = is_unexpected(expected, violations, name)
    log.info("verify %s: checked=%d violations=%d unexpected=%s elapsed=%.3fs", name, checked, len(violations), unexpected, elapsed)
    for v in violations:
        log.debug("violation %s", v)
    verdict: Dict[str, Any] = {
        "suite": name,
        "params": p.to_dict(),
        "checked": checked,
        "violations": violations,
        "elapsed": round(elapsed, 6),
        "expected": expected,
        "unexpected": unexpected,
    }
    if extra:
        verdict["report"] = extra
    return verdict
