"""The aperiodic Jordan algebra J(F) built from quasiaddition.

L_n o L_m = 1/2 (L_{n|-m} + L_{m|-n}); on indices n|-m = n' - m' + 2n - m
where F(n) = n' + n*tau. Finite truncations keep the generators with
|n| <= N and either zero the whole product or drop the terms that leave
the window.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Dict, List, Literal, Optional, Tuple

from fibalg.engine.algebra import (
    ZERO_ELEMENT,
    AlgebraElement,
    BasisKey,
    ChainIndex,
    Point,
    bilinear_extend,
    in_span,
    render_element,
    solve_linear,
)
from fibalg.engine.chain import (
    ChainSpec,
    Violation,
    index_of,
    point,
    qadd,
    qadd_index,
    violation,
)
from fibalg.engine.errors import IndexOutsideWindow, ParseError, PreconditionError
from fibalg.engine.golden import GoldenRational

log = logging.getLogger(__name__)

HALF = Fraction(1, 2)

TruncationMode = Literal["zero-product", "drop-term"]
TRUNCATION_MODES = ("zero-product", "drop-term")


@dataclass(frozen=True)
class JordanSpec:
    chain: ChainSpec = ChainSpec()


@dataclass(frozen=True)
class TruncationSpec:
    chain: ChainSpec = ChainSpec()
    n_max: int = 6
    mode: TruncationMode = "zero-product"

    def __post_init__(self) -> None:
        if self.n_max < 0:
            raise PreconditionError("truncation window needs N >= 0", {"N": self.n_max})
        if self.mode not in TRUNCATION_MODES:
            raise ParseError("unknown truncation mode", {"mode": self.mode, "allowed": list(TRUNCATION_MODES)})

    def contains(self, n: int) -> bool:
        return -self.n_max <= n <= self.n_max

    @property
    def basis(self) -> List[int]:
        return list(range(-self.n_max, self.n_max + 1))

    @property
    def jordan(self) -> JordanSpec:
        return JordanSpec(self.chain)


# --- products ------------------------------------------------------------


def product_indices(spec: JordanSpec, n: int, m: int) -> Tuple[int, int]:
    return qadd_index(spec.chain, n, m), qadd_index(spec.chain, m, n)


@lru_cache(maxsize=None)
def jordan_product(spec: JordanSpec, n: int, m: int) -> AlgebraElement:
    p, q = product_indices(spec, n, m)
    # from_terms merges the two halves on the diagonal
    return AlgebraElement.from_terms([(ChainIndex(p), HALF), (ChainIndex(q), HALF)])


def jordan_product_points(spec: JordanSpec, x: GoldenRational, y: GoldenRational) -> AlgebraElement:
    index_of(spec.chain, x)
    index_of(spec.chain, y)
    return AlgebraElement.from_terms([(Point(qadd(x, y)), HALF), (Point(qadd(y, x)), HALF)])


def jordan_keys(spec: JordanSpec, a: BasisKey, b: BasisKey) -> AlgebraElement:
    if isinstance(a, ChainIndex) and isinstance(b, ChainIndex):
        return jordan_product(spec, a.n, b.n)
    if isinstance(a, Point) and isinstance(b, Point):
        return jordan_product_points(spec, a.x, b.x)
    raise PreconditionError("Jordan generators must share one key kind", {"a": repr(a), "b": repr(b)})


def jordan(spec: JordanSpec, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return bilinear_extend(lambda x, y: jordan_keys(spec, x, y), a, b)


def to_indices(spec: JordanSpec, e: AlgebraElement) -> AlgebraElement:
    pairs = []
    for key, c in e.terms:
        if not isinstance(key, Point):
            raise PreconditionError("expected point generators", {"key": repr(key)})
        pairs.append((ChainIndex(index_of(spec.chain, key.x)), c))
    return AlgebraElement.from_terms(pairs)


@lru_cache(maxsize=None)
def truncated_product(tspec: TruncationSpec, n: int, m: int) -> AlgebraElement:
    for k in (n, m):
        if not tspec.contains(k):
            raise IndexOutsideWindow("generator outside the truncation window", {"index": k, "N": tspec.n_max})
    full = jordan_product(tspec.jordan, n, m)
    inside = [(k, c) for k, c in full.terms if isinstance(k, ChainIndex) and tspec.contains(k.n)]
    if tspec.mode == "zero-product" and len(inside) != len(full.terms):
        return ZERO_ELEMENT
    return AlgebraElement(tuple(inside))


def truncated(tspec: TruncationSpec, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    def on_keys(x: BasisKey, y: BasisKey) -> AlgebraElement:
        if not isinstance(x, ChainIndex) or not isinstance(y, ChainIndex):
            raise PreconditionError("truncated generators are integer indices", {"a": repr(x), "b": repr(y)})
        return truncated_product(tspec, x.n, y.n)

    return bilinear_extend(on_keys, a, b)


# --- verifiers -----------------------------------------------------------


def _range(lo: int, hi: int) -> range:
    if lo > hi:
        raise PreconditionError("empty range", {"lo": lo, "hi": hi})
    return range(lo, hi + 1)


def check_commutativity(spec: JordanSpec, lo: int, hi: int) -> List[Violation]:
    return [
        violation("commutativity", "L_n o L_m != L_m o L_n", n=n, m=m)
        for n, m in product(_range(lo, hi), repeat=2)
        if jordan_product(spec, n, m) != jordan_product(spec, m, n)
    ]


def check_idempotence(spec: JordanSpec, lo: int, hi: int) -> List[Violation]:
    return [
        violation("idempotence", "L_n o L_n != L_n", n=n)
        for n in _range(lo, hi)
        if jordan_product(spec, n, n) != AlgebraElement.basis(ChainIndex(n))
    ]


def check_sum_rule(spec: JordanSpec, lo: int, hi: int) -> List[Violation]:
    fails: List[Violation] = []
    for n, m in product(_range(lo, hi), repeat=2):
        p, q = product_indices(spec, n, m)
        keys = {ChainIndex(p), ChainIndex(q)}
        if p + q != n + m or set(jordan_product(spec, n, m).keys()) != keys:
            fails.append(violation("sum_rule", "output indices do not sum to n+m", n=n, m=m, p=p, q=q))
    log.info("sum rule %s [%d,%d]: %d violations", spec.chain.label, lo, hi, len(fails))
    return fails


def check_point_agreement(spec: JordanSpec, lo: int, hi: int) -> List[Violation]:
    fails: List[Violation] = []
    for n, m in product(_range(lo, hi), repeat=2):
        x, y = point(spec.chain, n).value, point(spec.chain, m).value
        if to_indices(spec, jordan_product_points(spec, x, y)) != jordan_product(spec, n, m):
            fails.append(violation("point_index_mismatch", "point and index products disagree", n=n, m=m))
    return fails


def _jordan_identity_gap(mul: Any, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    xx = mul(x, x)
    return mul(mul(x, y), xx) - mul(x, mul(y, xx))


def check_jordan_identity(spec: JordanSpec, lo: int, hi: int) -> List[Violation]:
    fails: List[Violation] = []
    mul = lambda a, b: jordan(spec, a, b)  # noqa: E731
    for n, m in product(_range(lo, hi), repeat=2):
        gap = _jordan_identity_gap(mul, AlgebraElement.basis(ChainIndex(n)), AlgebraElement.basis(ChainIndex(m)))
        if gap:
            fails.append(violation("jordan_identity", "(xy)(xx) != x(y(xx))", n=n, m=m, gap=render_element(gap, ascii=True)))
    log.info("jordan identity %s [%d,%d]: %d violations", spec.chain.label, lo, hi, len(fails))
    return fails


def zero_map_directions(spec: JordanSpec, lo: int, hi: int) -> Dict[str, Optional[str]]:
    if lo >= hi:
        raise PreconditionError("monotonicity needs two points", {"lo": lo, "hi": hi})

    def direction(values: List[int]) -> Optional[str]:
        steps = [b - a for a, b in zip(values, values[1:])]
        if all(s > 0 for s in steps):
            return "increasing"
        if all(s < 0 for s in steps):
            return "decreasing"
        return None

    ns = range(lo, hi + 1)
    return {
        "zero_left": direction([qadd_index(spec.chain, 0, n) for n in ns]),
        "zero_right": direction([qadd_index(spec.chain, n, 0) for n in ns]),
    }


def check_monotone_zero_maps(spec: JordanSpec, lo: int, hi: int) -> bool:
    dirs = zero_map_directions(spec, lo, hi)
    return all(d is not None for d in dirs.values())


def check_no_identity(spec: JordanSpec, n_max: int, m_max: int) -> bool:
    """True when no sum of L_k, |k| <= n_max, acts as identity on L_n, |n| <= m_max."""
    if m_max < 0 or m_max >= n_max:
        raise PreconditionError("need 0 <= M < N", {"N": n_max, "M": m_max})
    constraints = range(-m_max, m_max + 1)
    columns = []
    for k in range(-n_max, n_max + 1):
        col: Dict[Any, GoldenRational] = {}
        for n in constraints:
            for key, c in jordan_product(spec, k, n).terms:
                col[(n, key)] = c
        columns.append(col)
    rhs = {(n, ChainIndex(n)): GoldenRational(1) for n in constraints}
    solution = solve_linear(columns, rhs)
    log.info("identity search %s N=%d M=%d: %s", spec.chain.label, n_max, m_max, "found" if solution else "none")
    return solution is None


def ideal_generators(spec: JordanSpec, n_max: int) -> List[AlgebraElement]:
    return [jordan_product(spec, 0, n) for n in range(-n_max, n_max + 1)]


def check_proper_ideal(spec: JordanSpec, n_max: int, target: Optional[AlgebraElement] = None) -> bool:
    """True when target (default L_1) is outside span{L_0 o L_n : |n| <= n_max}."""
    if n_max < 2:
        raise PreconditionError("ideal window needs N >= 2", {"N": n_max})
    goal = target if target is not None else AlgebraElement.basis(ChainIndex(1))
    return not in_span(goal, ideal_generators(spec, n_max)).in_span


# --- truncations ---------------------------------------------------------


@dataclass
class TruncationReport:
    commutative: bool
    jordan_identity: bool
    witnesses: List[Violation] = field(default_factory=list)
    checked_pairs: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "commutative": self.commutative,
            "jordan_identity": self.jordan_identity,
            "witnesses": list(self.witnesses),
            "checked_pairs": self.checked_pairs,
        }


def check_truncated_axioms(tspec: TruncationSpec) -> TruncationReport:
    witnesses: List[Violation] = []
    commutative = True
    identity = True
    mul = lambda a, b: truncated(tspec, a, b)  # noqa: E731
    pairs = list(product(tspec.basis, repeat=2))
    for n, m in pairs:
        if truncated_product(tspec, n, m) != truncated_product(tspec, m, n):
            commutative = False
            witnesses.append(violation("commutativity", "truncated product not symmetric", n=n, m=m))
        gap = _jordan_identity_gap(mul, AlgebraElement.basis(ChainIndex(n)), AlgebraElement.basis(ChainIndex(m)))
        if gap:
            identity = False
            witnesses.append(violation("jordan_identity", "(xy)(xx) != x(y(xx))", n=n, m=m, gap=render_element(gap, ascii=True)))
    log.info("truncated axioms N=%d %s: commutative=%s jordan=%s", tspec.n_max, tspec.mode, commutative, identity)
    return TruncationReport(commutative, identity, witnesses, len(pairs))


@dataclass(frozen=True)
class StructureConstantTable:
    chain: ChainSpec
    n_max: int
    mode: TruncationMode
    entries: Tuple[Tuple[int, int, int, GoldenRational], ...]

    @property
    def basis(self) -> List[int]:
        return list(range(-self.n_max, self.n_max + 1))

    @property
    def spec(self) -> TruncationSpec:
        return TruncationSpec(self.chain, self.n_max, self.mode)

    def lookup(self) -> Dict[Tuple[int, int, int], GoldenRational]:
        return {(i, j, k): v for i, j, k, v in self.entries}

    def constant(self, i: int, j: int, k: int) -> GoldenRational:
        return self.lookup().get((i, j, k), GoldenRational(0))

    def is_symmetric(self) -> bool:
        table = self.lookup()
        return all(table.get((i, k, j)) == v for (i, j, k), v in table.items())

    def upper(self) -> List[Tuple[int, int, int, GoldenRational]]:
        """Entries with j <= k, sorted."""
        return sorted((e for e in self.entries if e[1] <= e[2]), key=lambda e: (e[1], e[2], e[0]))


def export_structure_constants(tspec: TruncationSpec) -> StructureConstantTable:
    entries = []
    for j, k in product(tspec.basis, repeat=2):
        for key, c in truncated_product(tspec, j, k).terms:
            assert isinstance(key, ChainIndex)
            entries.append((key.n, j, k, c))
    entries.sort(key=lambda e: (e[1], e[2], e[0]))
    return StructureConstantTable(tspec.chain, tspec.n_max, tspec.mode, tuple(entries))


def symmetric_entries(upper: List[Tuple[int, int, int, GoldenRational]]) -> Tuple[Tuple[int, int, int, GoldenRational], ...]:
    full = {}
    for i, j, k, v in upper:
        full[(i, j, k)] = v
        full[(i, k, j)] = v
    return tuple(sorted(((i, j, k, v) for (i, j, k), v in full.items()), key=lambda e: (e[1], e[2], e[0])))


def rebuild_product(table: StructureConstantTable, n: int, m: int) -> AlgebraElement:
    pairs = [(ChainIndex(i), v) for i, j, k, v in table.entries if j == n and k == m]
    return AlgebraElement.from_terms(pairs)


def check_round_trip(table: StructureConstantTable) -> List[Violation]:
    tspec = table.spec
    return [
        violation("round_trip", "rebuilt product differs", n=n, m=m)
        for n, m in product(tspec.basis, repeat=2)
        if rebuild_product(table, n, m) != truncated_product(tspec, n, m)
    ]
