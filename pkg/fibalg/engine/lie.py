"""Quasicrystal Lie, aperiodic Witt and Virasoro brackets plus their verifiers.

QCLie lives on the defect chain F_{1,0} with the origin adjoined, i.e. the
model set of the closed window [0, 1]. Witt and Virasoro are indexed by the
integers and filter (n - m) L_{n+m} through the half-open chain window.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import List, Literal, Protocol, Sequence, Union

from fibalg.engine.algebra import (
    CENTRAL,
    ZERO_ELEMENT,
    AlgebraElement,
    BasisKey,
    Central,
    ChainIndex,
    Point,
    bilinear_extend,
    elem_sum,
    elem_scale,
    render_element,
)
from fibalg.engine.chain import ChainSpec, Violation, point, violation
from fibalg.engine.errors import InvalidWindow, NotInChain, ParseError, PreconditionError
from fibalg.engine.golden import SQRT5, GoldenRational, format_rational

log = logging.getLogger(__name__)

AlgebraKind = Literal["qclie", "witt", "virasoro"]
CentralSign = Literal["table", "equation"]
ALGEBRA_KINDS = ("qclie", "witt", "virasoro")
CENTRAL_SIGNS = ("table", "equation")


class Window(Protocol):
    def contains(self, s: GoldenRational) -> bool: ...


@dataclass(frozen=True)
class ClosedWindow:
    low: Fraction = Fraction(0)
    high: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "low", Fraction(self.low))
        object.__setattr__(self, "high", Fraction(self.high))
        if self.low > self.high:
            raise PreconditionError("window bounds reversed", {"low": str(self.low), "high": str(self.high)})

    @property
    def is_lie_compatible(self) -> bool:
        return self.low * self.high >= 0

    def contains(self, s: GoldenRational) -> bool:
        return GoldenRational.from_rational(self.low) <= s <= GoldenRational.from_rational(self.high)

    @property
    def label(self) -> str:
        return f"[{format_rational(self.low)},{format_rational(self.high)}]"


UNIT_WINDOW = ClosedWindow(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class LieAlgebraSpec:
    kind: AlgebraKind = "witt"
    chain: ChainSpec = ChainSpec()
    window: ClosedWindow = UNIT_WINDOW
    central_sign: CentralSign = "table"
    falsify: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ALGEBRA_KINDS:
            raise ParseError("unknown algebra kind", {"kind": self.kind, "allowed": list(ALGEBRA_KINDS)})
        if self.central_sign not in CENTRAL_SIGNS:
            raise ParseError("unknown central sign", {"central_sign": self.central_sign})
        if not self.is_valid and not self.falsify:
            raise InvalidWindow(
                "window fails the Lie validity condition; pass falsify to explore it",
                {"kind": self.kind, "chain": self.chain.label, "window": self.window.label},
            )

    @property
    def is_valid(self) -> bool:
        if self.kind == "qclie":
            return self.window.is_lie_compatible
        return self.chain.is_lie_compatible


# --- the defect chain ----------------------------------------------------


def _ceil(x: GoldenRational) -> int:
    return -(-x).floor()


def closed_window_points(window: ClosedWindow, lo: int, hi: int) -> List[GoldenRational]:
    """Model set of a closed window, for tau-coefficients lo..hi."""
    if lo > hi:
        raise PreconditionError("empty range", {"lo": lo, "hi": hi})
    low = GoldenRational.from_rational(window.low)
    high = GoldenRational.from_rational(window.high)
    out = []
    for b in range(lo, hi + 1):
        # star(a + b tau) = a + b(1 - tau)
        shift = GoldenRational(b, -b)
        for a in range(_ceil(low - shift), (high - shift).floor() + 1):
            out.append(GoldenRational(a, b))
    return sorted(out)


def window_points(window: ClosedWindow, lo: GoldenRational, hi: GoldenRational) -> List[GoldenRational]:
    if not lo < hi:
        raise PreconditionError("empty interval", {"lo": str(lo), "hi": str(hi)})
    # x - star(x) == b * sqrt5 for x = a + b tau
    b_lo = _ceil((lo - GoldenRational.from_rational(window.high)) / SQRT5)
    b_hi = ((hi - GoldenRational.from_rational(window.low)) / SQRT5).floor()
    return [x for x in closed_window_points(window, b_lo, b_hi) if lo <= x <= hi]


def defect_chain_points(lo: GoldenRational, hi: GoldenRational) -> List[GoldenRational]:
    return window_points(UNIT_WINDOW, lo, hi)


def in_window_chain(window: ClosedWindow, x: GoldenRational) -> bool:
    return x.is_dirichlet_integer and window.contains(x.star())


# --- brackets ------------------------------------------------------------


@lru_cache(maxsize=None)
def qclie_bracket_window(window: ClosedWindow, x: GoldenRational, y: GoldenRational) -> AlgebraElement:
    for z in (x, y):
        if not in_window_chain(window, z):
            raise NotInChain("generator outside the closed-window chain", {"x": str(z), "window": window.label})
    if x == y:
        return ZERO_ELEMENT
    if not window.contains(x.star() + y.star()):
        return ZERO_ELEMENT
    return AlgebraElement.basis(Point(x + y), y - x)


def qclie_bracket(x: GoldenRational, y: GoldenRational) -> AlgebraElement:
    return qclie_bracket_window(UNIT_WINDOW, x, y)


@lru_cache(maxsize=None)
def witt_bracket(spec: LieAlgebraSpec, n: int, m: int) -> AlgebraElement:
    if n == m:
        return ZERO_ELEMENT
    s = point(spec.chain, n).value.star() + point(spec.chain, m).value.star()
    if not spec.chain.contains(s):
        return ZERO_ELEMENT
    return AlgebraElement.basis(ChainIndex(n + m), n - m)


def central_charge(spec: LieAlgebraSpec, n: int, m: int) -> Fraction:
    if n + m != 0:
        return Fraction(0)
    c = Fraction(n * (n * n - 1), 12)
    return -c if spec.central_sign == "table" else c


@lru_cache(maxsize=None)
def virasoro_bracket(spec: LieAlgebraSpec, n: int, m: int) -> AlgebraElement:
    base = witt_bracket(spec, n, m)
    c = central_charge(spec, n, m)
    if not c:
        return base
    return base + AlgebraElement.basis(CENTRAL, c)


def bracket_keys(spec: LieAlgebraSpec, a: BasisKey, b: BasisKey) -> AlgebraElement:
    if isinstance(a, Central) or isinstance(b, Central):
        return ZERO_ELEMENT
    if spec.kind == "qclie":
        if not isinstance(a, Point) or not isinstance(b, Point):
            raise PreconditionError("QCLie generators are points", {"a": repr(a), "b": repr(b)})
        return qclie_bracket_window(spec.window, a.x, b.x)
    if not isinstance(a, ChainIndex) or not isinstance(b, ChainIndex):
        raise PreconditionError("Witt generators are integer indices", {"a": repr(a), "b": repr(b)})
    if spec.kind == "virasoro":
        return virasoro_bracket(spec, a.n, b.n)
    return witt_bracket(spec, a.n, b.n)


def bracket(spec: LieAlgebraSpec, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return bilinear_extend(lambda x, y: bracket_keys(spec, x, y), a, b)


def _bracket_key_elem(spec: LieAlgebraSpec, key: BasisKey, e: AlgebraElement) -> AlgebraElement:
    return elem_sum(elem_scale(c, bracket_keys(spec, key, k)) for k, c in e.terms)


def generator_keys(spec: LieAlgebraSpec, lo: int, hi: int) -> List[BasisKey]:
    """Generators of the test range: integer indices, or tau-coefficients for QCLie."""
    if lo > hi:
        raise PreconditionError("empty range", {"lo": lo, "hi": hi})
    if spec.kind == "qclie":
        return [Point(x) for x in closed_window_points(spec.window, lo, hi)]
    return [ChainIndex(n) for n in range(lo, hi + 1)]


def _key_text(key: BasisKey) -> str:
    return render_element(AlgebraElement.basis(key), ascii=True)


# --- verifiers -----------------------------------------------------------


def check_antisymmetry(spec: LieAlgebraSpec, lo: int, hi: int) -> List[Violation]:
    keys = generator_keys(spec, lo, hi)
    fails: List[Violation] = []
    for a, b in product(keys, repeat=2):
        total = bracket_keys(spec, a, b) + bracket_keys(spec, b, a)
        if total:
            fails.append(violation("antisymmetry", "[a,b] + [b,a] != 0", a=_key_text(a), b=_key_text(b), sum=render_element(total, ascii=True)))
    log.info("antisymmetry %s: %d pairs, %d violations", spec.kind, len(keys) ** 2, len(fails))
    return fails


def jacobi_sum(spec: LieAlgebraSpec, a: BasisKey, b: BasisKey, c: BasisKey) -> AlgebraElement:
    return elem_sum(
        [
            _bracket_key_elem(spec, a, bracket_keys(spec, b, c)),
            _bracket_key_elem(spec, b, bracket_keys(spec, c, a)),
            _bracket_key_elem(spec, c, bracket_keys(spec, a, b)),
        ]
    )


def check_jacobi(spec: LieAlgebraSpec, lo: int, hi: int) -> List[Violation]:
    keys = generator_keys(spec, lo, hi)
    fails: List[Violation] = []
    for a, b, c in product(keys, repeat=3):
        total = jacobi_sum(spec, a, b, c)
        if total:
            fails.append(
                violation(
                    "jacobi",
                    "[a,[b,c]] + [b,[c,a]] + [c,[a,b]] != 0",
                    a=_key_text(a),
                    b=_key_text(b),
                    c=_key_text(c),
                    sum=render_element(total, ascii=True),
                )
            )
    log.info("jacobi %s %s: %d triples, %d violations", spec.kind, spec.chain.label, len(keys) ** 3, len(fails))
    for f in fails[:20]:
        log.debug("jacobi violation %s", f["details"])
    return fails


def _sub_window(c: Union[Fraction, int], name: str) -> ClosedWindow:
    c = Fraction(c)
    if not 0 < c < 1:
        raise PreconditionError("sub-window start must lie in (0, 1)", {name: format_rational(c)})
    return ClosedWindow(c, Fraction(1))


def abelian_witnesses(c_low: Union[Fraction, int], lo: int, hi: int) -> List[Violation]:
    """Nonzero brackets among generators whose star image lies in [c_low, 1]."""
    sub = _sub_window(c_low, "c_low")
    points = closed_window_points(sub, lo, hi)
    fails: List[Violation] = []
    for x, y in product(points, repeat=2):
        value = qclie_bracket(x, y)
        if value:
            fails.append(violation("bracket_survives", "[L_x, L_y] != 0 inside the sub-window", x=str(x), y=str(y), value=render_element(value, ascii=True)))
    log.info("abelian sub-window %s: %d points, %d surviving brackets", sub.label, len(points), len(fails))
    return fails


def check_abelian_subwindow(c_low: Union[Fraction, int], lo: int, hi: int) -> bool:
    return not abelian_witnesses(c_low, lo, hi)


def ideal_leaks(c: Union[Fraction, int], lo: int, hi: int) -> List[Violation]:
    """Brackets [L_x, L_y], x in F([c,1]), y in F([0,1]), landing outside span{L_z : z in F([c,1])}."""
    sub = _sub_window(c, "c")
    inner = closed_window_points(sub, lo, hi)
    outer = closed_window_points(UNIT_WINDOW, lo, hi)
    fails: List[Violation] = []
    for x, y in product(inner, outer):
        for key in qclie_bracket(x, y).keys():
            if not isinstance(key, Point) or not in_window_chain(sub, key.x):
                fails.append(violation("ideal_leak", "bracket leaves the ideal", x=str(x), y=str(y), key=_key_text(key)))
    log.info("ideal %s: %d pairs, %d leaks", sub.label, len(inner) * len(outer), len(fails))
    return fails


def check_ideal(c: Union[Fraction, int], lo: int, hi: int) -> bool:
    return not ideal_leaks(c, lo, hi)


def check_chi_factorization(window: Window, points: Sequence[GoldenRational]) -> List[Violation]:
    stars = [x.star() for x in points]
    fails: List[Violation] = []
    for i, j, k in product(range(len(stars)), repeat=3):
        s2 = stars[i] + stars[j]
        if window.contains(s2 + stars[k]) and not window.contains(s2):
            fails.append(
                violation(
                    "chi_factorization",
                    "chi(x*+y*+z*) = 1 but chi(x*+y*) = 0",
                    x=str(points[i]),
                    y=str(points[j]),
                    z=str(points[k]),
                )
            )
    return fails


def check_reflection_symmetry(lo: int, hi: int) -> List[Violation]:
    fails: List[Violation] = []
    for x in closed_window_points(UNIT_WINDOW, lo, hi):
        mirror = 1 - x
        if not in_window_chain(UNIT_WINDOW, mirror):
            fails.append(violation("not_reflected", "1 - x leaves the defect chain", x=str(x)))
    return fails
