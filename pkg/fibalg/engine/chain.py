"""Fibonacci-chain quasicrystals F_{alpha,beta} and quasiaddition.

A chain is generated two ways: by the explicit coordinate formula
``floor(n/tau + alpha) + n*tau + beta`` and as the model set of Dirichlet
integers whose star image falls in the window (-1+alpha+beta, alpha+beta].
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Tuple, Union

from fibalg.engine.errors import (
    NotDirichletInteger,
    NotInChain,
    ParseError,
    PreconditionError,
    UnexpectedGap,
)
from fibalg.engine.golden import (
    TAU,
    TAU_SQUARED,
    GoldenRational,
    format_golden,
    format_rational,
    parse_rational,
)

log = logging.getLogger(__name__)

Violation = Dict[str, Any]

SUBSTITUTION_RULES = {"A": "AB", "B": "A"}
SUBSTITUTION_SEED = "B"
LONG_GAP = TAU_SQUARED
SHORT_GAP = TAU
# (1 - tau)^2 and (tau - 1): weights of the star image of a quasisum
STAR_WEIGHT_LEFT = GoldenRational(2, -1)
STAR_WEIGHT_RIGHT = GoldenRational(-1, 1)
RATIO_TOLERANCE = GoldenRational(1, 0, 100)


def violation(code: str, message: str, **details: Any) -> Violation:
    return {"code": code, "message": message, "details": details}


@dataclass(frozen=True)
class ChainSpec:
    alpha: Fraction = Fraction(1)
    beta: int = 0

    def __post_init__(self) -> None:
        alpha: Union[Fraction, int, str] = self.alpha
        if isinstance(alpha, str):
            alpha = parse_rational(alpha)
        if isinstance(alpha, bool) or not isinstance(alpha, (int, Fraction)):
            raise ParseError("alpha must be an exact rational", {"alpha": repr(self.alpha)})
        if isinstance(self.beta, bool) or not isinstance(self.beta, int):
            raise ParseError("beta must be an integer", {"beta": repr(self.beta)})
        object.__setattr__(self, "alpha", Fraction(alpha))

    @property
    def window_low(self) -> GoldenRational:
        return GoldenRational.from_rational(self.alpha + self.beta - 1)

    @property
    def window_high(self) -> GoldenRational:
        return GoldenRational.from_rational(self.alpha + self.beta)

    @property
    def window(self) -> Tuple[GoldenRational, GoldenRational]:
        return (self.window_low, self.window_high)

    @property
    def is_lie_compatible(self) -> bool:
        return (self.alpha + self.beta - 1) * (self.alpha + self.beta) >= 0

    def contains(self, s: GoldenRational) -> bool:
        # left-open, right-closed
        return self.window_low < s <= self.window_high

    @property
    def label(self) -> str:
        return f"F_{{{format_rational(self.alpha)},{self.beta}}}"


@dataclass(frozen=True)
class ChainPoint:
    index: int
    value: GoldenRational
    int_part: int


@lru_cache(maxsize=None)
def point(spec: ChainSpec, n: int) -> ChainPoint:
    # n / tau == n * (tau - 1)
    k = (GoldenRational(-n, n) + spec.alpha).floor()
    int_part = k + spec.beta
    return ChainPoint(index=n, value=GoldenRational(int_part, n), int_part=int_part)


def membership(spec: ChainSpec, x: GoldenRational) -> int:
    if not x.is_dirichlet_integer:
        raise NotDirichletInteger("chain membership needs a Dirichlet integer", {"x": str(x)})
    return 1 if spec.contains(x.star()) else 0


def index_of(spec: ChainSpec, x: GoldenRational) -> int:
    if membership(spec, x) != 1:
        raise NotInChain("star image outside the acceptance window", {"x": str(x), "chain": spec.label})
    n = x.q
    if point(spec, n).value != x:
        raise NotInChain("point does not regenerate", {"x": str(x), "index": n, "chain": spec.label})
    return n


def chain_range(spec: ChainSpec, lo: int, hi: int) -> List[ChainPoint]:
    if lo > hi:
        raise PreconditionError("empty index range", {"lo": lo, "hi": hi})
    return [point(spec, n) for n in range(lo, hi + 1)]


def gaps(values: List[GoldenRational]) -> List[GoldenRational]:
    return [b - a for a, b in zip(values, values[1:])]


def word_from_values(values: List[GoldenRational]) -> str:
    letters = []
    for i, gap in enumerate(gaps(values)):
        if gap == LONG_GAP:
            letters.append("A")
        elif gap == SHORT_GAP:
            letters.append("B")
        else:
            raise UnexpectedGap(
                "gap is neither tau nor tau^2",
                {"left": str(values[i]), "right": str(values[i + 1]), "gap": str(gap)},
            )
    return "".join(letters)


def gap_word(spec: ChainSpec, lo: int, hi: int) -> str:
    if lo >= hi:
        raise PreconditionError("gap word needs at least two points", {"lo": lo, "hi": hi})
    return word_from_values([p.value for p in chain_range(spec, lo, hi)])


@lru_cache(maxsize=32)
def substitution_word(k: int) -> str:
    if k < 0:
        raise PreconditionError("substitution depth must be non-negative", {"k": k})
    word = SUBSTITUTION_SEED
    for _ in range(k):
        word = "".join(SUBSTITUTION_RULES[c] for c in word)
    return word


def qadd(x: GoldenRational, y: GoldenRational) -> GoldenRational:
    return TAU_SQUARED * x - TAU * y


def qadd_index(spec: ChainSpec, n: int, m: int) -> int:
    return point(spec, n).int_part - point(spec, m).int_part + 2 * n - m


# --- cut and project -----------------------------------------------------


def lift(x: GoldenRational) -> Tuple[int, int, GoldenRational]:
    if not x.is_dirichlet_integer:
        raise NotDirichletInteger("only Dirichlet integers lift to the lattice", {"x": str(x)})
    return (x.p, x.q, x.star())


def model_set(spec: ChainSpec, a_bound: int, b_bound: int) -> List[GoldenRational]:
    out = []
    for b in range(-b_bound, b_bound + 1):
        for a in range(-a_bound, a_bound + 1):
            # perpendicular coordinate a + b(1 - tau)
            if spec.contains(GoldenRational(a + b, -b)):
                out.append(GoldenRational(a, b))
    return sorted(out)


# --- verifiers -----------------------------------------------------------


def check_chain_equivalence(spec: ChainSpec, bound: int, index_bound: int = 200) -> List[Violation]:
    fails: List[Violation] = []
    for n in range(-index_bound, index_bound + 1):
        pt = point(spec, n)
        if membership(spec, pt.value) != 1:
            fails.append(violation("formula_outside_window", "formula point fails window test", index=n, x=str(pt.value)))
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            x = GoldenRational(a, b)
            inside = membership(spec, x) == 1
            try:
                index_of(spec, x)
                regenerated = True
            except NotInChain:
                regenerated = False
            if inside != regenerated:
                fails.append(violation("window_formula_mismatch", "window and formula disagree", x=str(x), window=inside))
    log.info("chain equivalence %s bound=%d: %d violations", spec.label, bound, len(fails))
    return fails


def check_quasiaddition(spec: ChainSpec, lo: int, hi: int) -> List[Violation]:
    values = [p.value for p in chain_range(spec, lo, hi)]
    fails: List[Violation] = []
    for n in values:
        if qadd(n, n) != n:
            fails.append(violation("idempotence", "n|-n != n", n=str(n)))
        for m in values:
            nm, mn = qadd(n, m), qadd(m, n)
            if qadd(n, nm) != mn:
                fails.append(violation("left_absorption", "n|-(n|-m) != m|-n", n=str(n), m=str(m)))
            if nm + mn != n + m:
                fails.append(violation("sum", "(n|-m)+(m|-n) != n+m", n=str(n), m=str(m)))
            if nm - mn != qadd(n - m, m - n):
                fails.append(violation("difference", "(n|-m)-(m|-n) != (n-m)|-(m-n)", n=str(n), m=str(m)))
            if qadd(n, mn) != qadd(nm, n):
                fails.append(violation("flexibility", "n|-(m|-n) != (n|-m)|-n", n=str(n), m=str(m)))
            for p in values:
                if qadd(n + p, m + p) != nm + p:
                    fails.append(violation("translation", "(n+p)|-(m+p) != (n|-m)+p", n=str(n), m=str(m), p=str(p)))
    fails.extend(check_closure(spec, lo, hi))
    log.info("quasiaddition %s [%d,%d]: %d violations", spec.label, lo, hi, len(fails))
    return fails


def check_qadd_index(spec: ChainSpec, lo: int, hi: int) -> List[Violation]:
    fails: List[Violation] = []
    for n in range(lo, hi + 1):
        for m in range(lo, hi + 1):
            k = qadd_index(spec, n, m)
            if point(spec, k).value != qadd(point(spec, n).value, point(spec, m).value):
                fails.append(violation("index_mismatch", "qadd_index does not commute with point", n=n, m=m, index=k))
    return fails


def check_palindrome(spec: ChainSpec, lo: int, hi: int) -> List[Violation]:
    fails: List[Violation] = []
    for n in range(lo, hi + 1):
        if point(spec, -n).value != -point(spec, n).value:
            fails.append(violation("not_symmetric", "F(-n) != -F(n)", index=n))
    return fails


def check_gap_word(spec: ChainSpec, length: int = 100, max_depth: int = 15, ratio_gaps: int = 10_000) -> Dict[str, Any]:
    word = gap_word(spec, 0, length)
    depth_used = None
    for k in range(max_depth + 1):
        if word in substitution_word(k):
            depth_used = k
            break
    long_word = gap_word(spec, 0, ratio_gaps)
    count_a = long_word.count("A")
    count_b = long_word.count("B")
    ratio = Fraction(count_a, count_b)
    error = GoldenRational.from_rational(ratio) - TAU
    if error.sign() < 0:
        error = -error
    report = {
        "word": word,
        "factor_found": depth_used is not None,
        "depth_used": depth_used,
        "count_a": count_a,
        "count_b": count_b,
        "ratio": format_rational(ratio),
        "ratio_error": format_golden(error, ascii=True),
        "ratio_within_tolerance": error < RATIO_TOLERANCE,
    }
    log.info("gap word %s: depth=%s ratio=%s", spec.label, depth_used, report["ratio"])
    return report


def check_closure(spec: ChainSpec, lo: int, hi: int) -> List[Violation]:
    values = [p.value for p in chain_range(spec, lo, hi)]
    fails: List[Violation] = []
    for n in values:
        for m in values:
            nm = qadd(n, m)
            if membership(spec, nm) != 1:
                fails.append(violation("closure", "quasisum leaves the chain", n=str(n), m=str(m), x=str(nm)))
            if nm.star() != STAR_WEIGHT_LEFT * n.star() + STAR_WEIGHT_RIGHT * m.star():
                fails.append(violation("star_convexity", "star image is not the convex combination", n=str(n), m=str(m)))
    return fails
