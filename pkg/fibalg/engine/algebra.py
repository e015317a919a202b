"""Formal linear combinations of generators with Q(sqrt5) coefficients."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import (
    Callable,
    Dict,
    Hashable,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import sympy

from fibalg.engine.errors import NotDirichletInteger, ParseError
from fibalg.engine.golden import (
    ONE,
    TAU,
    ZERO,
    GoldenRational,
    format_golden,
    format_rational,
    parse_golden,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainIndex:
    n: int


@dataclass(frozen=True)
class Point:
    x: GoldenRational

    def __post_init__(self) -> None:
        if not self.x.is_dirichlet_integer:
            raise NotDirichletInteger("generator points must lie in Z[tau]", {"x": str(self.x)})


@dataclass(frozen=True)
class Central:
    pass


CENTRAL = Central()

BasisKey = Union[ChainIndex, Point, Central]
Coefficient = Union[GoldenRational, int, Fraction]


def key_order(key: BasisKey) -> Tuple[int, object]:
    if isinstance(key, Central):
        return (0, 0)
    if isinstance(key, ChainIndex):
        return (1, key.n)
    return (2, key.x)


def _coeff(value: Coefficient) -> GoldenRational:
    c = GoldenRational.coerce(value)
    if c is None:
        raise TypeError(f"not an exact scalar: {value!r}")
    return c


@dataclass(frozen=True)
class AlgebraElement:
    terms: Tuple[Tuple[BasisKey, GoldenRational], ...] = ()

    @classmethod
    def from_terms(cls, items: Iterable[Tuple[BasisKey, Coefficient]]) -> AlgebraElement:
        acc: Dict[BasisKey, GoldenRational] = {}
        for key, value in items:
            acc[key] = acc.get(key, ZERO) + _coeff(value)
        kept = [(k, c) for k, c in acc.items() if c]
        kept.sort(key=lambda kc: key_order(kc[0]))
        return cls(tuple(kept))

    @classmethod
    def basis(cls, key: BasisKey, coeff: Coefficient = 1) -> AlgebraElement:
        return cls.from_terms([(key, coeff)])

    def coeff(self, key: BasisKey) -> GoldenRational:
        for k, c in self.terms:
            if k == key:
                return c
        return ZERO

    def keys(self) -> List[BasisKey]:
        return [k for k, _ in self.terms]

    def as_dict(self) -> Dict[BasisKey, GoldenRational]:
        return dict(self.terms)

    def without(self, key: BasisKey) -> AlgebraElement:
        return AlgebraElement(tuple((k, c) for k, c in self.terms if k != key))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return elem_add(self, other)

    def __neg__(self) -> AlgebraElement:
        return elem_scale(-ONE, self)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return elem_add(self, -other)

    def __rmul__(self, c: Coefficient) -> AlgebraElement:
        return elem_scale(c, self)

    def __str__(self) -> str:
        return render_element(self)


ZERO_ELEMENT = AlgebraElement()


def L(n: int, coeff: Coefficient = 1) -> AlgebraElement:
    return AlgebraElement.basis(ChainIndex(n), coeff)


def LP(x: GoldenRational, coeff: Coefficient = 1) -> AlgebraElement:
    return AlgebraElement.basis(Point(x), coeff)


def elem_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if not b:
        return a
    if not a:
        return b
    return AlgebraElement.from_terms(list(a.terms) + list(b.terms))


def elem_scale(c: Coefficient, a: AlgebraElement) -> AlgebraElement:
    g = _coeff(c)
    if not g:
        return ZERO_ELEMENT
    return AlgebraElement(tuple((k, g * v) for k, v in a.terms))


def elem_sum(items: Iterable[AlgebraElement]) -> AlgebraElement:
    pairs: List[Tuple[BasisKey, Coefficient]] = []
    for e in items:
        pairs.extend(e.terms)
    return AlgebraElement.from_terms(pairs)


ProductOnBasis = Callable[[BasisKey, BasisKey], AlgebraElement]


def bilinear_extend(product: ProductOnBasis, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    pairs: List[Tuple[BasisKey, Coefficient]] = []
    for ka, ca in a.terms:
        for kb, cb in b.terms:
            w = ca * cb
            for k, v in product(ka, kb).terms:
                pairs.append((k, w * v))
    return AlgebraElement.from_terms(pairs)


# --- exact linear algebra ------------------------------------------------


def _rat(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _split(c: GoldenRational) -> Tuple[Fraction, Fraction]:
    return Fraction(c.p, c.d), Fraction(c.q, c.d)


def solve_linear(
    columns: Sequence[Mapping[Hashable, GoldenRational]],
    rhs: Mapping[Hashable, GoldenRational],
) -> Optional[List[GoldenRational]]:
    """Find g with sum_j g_j * columns[j] == rhs over Q(sqrt5), or None.

    Each unknown g_j = u_j + v_j*tau is split into two rational unknowns and
    each row key into its 1 and tau components; free parameters are set to 0.
    """
    if not columns:
        return [] if not any(rhs.values()) else None
    row_keys: Dict[Hashable, None] = {}
    for k in rhs:
        row_keys[k] = None
    for col in columns:
        for k in col:
            row_keys[k] = None
    width = 2 * len(columns)
    rows: List[List[sympy.Rational]] = []
    targets: List[sympy.Rational] = []
    for key in row_keys:
        one_row = [sympy.Integer(0)] * width
        tau_row = [sympy.Integer(0)] * width
        for j, col in enumerate(columns):
            c = col.get(key)
            if not c:
                continue
            a, b = _split(c)
            # (a + b t)(u + v t) = (a u + b v) + (b u + (a + b) v) t
            one_row[2 * j], one_row[2 * j + 1] = _rat(a), _rat(b)
            tau_row[2 * j], tau_row[2 * j + 1] = _rat(b), _rat(a + b)
        t1, tt = _split(rhs.get(key, ZERO))
        for row, t in ((one_row, t1), (tau_row, tt)):
            if any(row) or t:
                rows.append(row)
                targets.append(_rat(t))
    if not rows:
        return [ZERO] * len(columns)
    matrix = sympy.Matrix(rows)
    vector = sympy.Matrix(targets)
    try:
        solution, params = matrix.gauss_jordan_solve(vector)
    except ValueError:
        log.debug("linear system %dx%d inconsistent", len(rows), width)
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    values = [Fraction(int(v.p), int(v.q)) for v in solution]
    out = []
    for j in range(len(columns)):
        u, v = values[2 * j], values[2 * j + 1]
        out.append(GoldenRational.from_rational(u) + TAU * GoldenRational.from_rational(v))
    return out


@dataclass(frozen=True)
class SpanResult:
    in_span: bool
    certificate: Optional[Tuple[GoldenRational, ...]] = None

    def __bool__(self) -> bool:
        return self.in_span


def combine(coeffs: Sequence[GoldenRational], elements: Sequence[AlgebraElement]) -> AlgebraElement:
    return elem_sum(elem_scale(c, e) for c, e in zip(coeffs, elements))


def in_span(target: AlgebraElement, generators: Sequence[AlgebraElement]) -> SpanResult:
    cols = [g.as_dict() for g in generators]
    sol = solve_linear(cols, target.as_dict())
    if sol is None:
        return SpanResult(False)
    return SpanResult(True, tuple(sol))


# --- text form -----------------------------------------------------------


def render_key(key: BasisKey, ascii: bool = False) -> str:
    if isinstance(key, Central):
        return "C"
    if isinstance(key, ChainIndex):
        return f"L_{{{key.n}}}"
    return f"L_{{{format_golden(key.x, ascii=ascii)}}}"


def render_coeff(c: GoldenRational, ascii: bool = False) -> str:
    if c == ONE:
        return ""
    if c == -ONE:
        return "-"
    if c.is_rational:
        return format_rational(c.to_fraction())
    if c.p == 0 and c.d == 1:
        return format_golden(c, ascii=ascii)
    return f"({format_golden(c, ascii=ascii)})"


def _join(parts: List[str]) -> str:
    out = parts[0]
    for part in parts[1:]:
        out += part if part.startswith("-") else "+" + part
    return out


def render_element(e: AlgebraElement, ascii: bool = False) -> str:
    if not e:
        return "0"
    coeffs = {c for _, c in e.terms}
    if len(e.terms) > 1 and len(coeffs) == 1:
        (c,) = coeffs
        if c != ONE and c != -ONE:
            inner = _join([render_key(k, ascii) for k, _ in e.terms])
            return f"{render_coeff(c, ascii)}({inner})"
    return _join([render_coeff(c, ascii) + render_key(k, ascii) for k, c in e.terms])


def _split_terms(text: str) -> List[str]:
    terms: List[str] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced brackets", {"text": text})
        elif ch in "+-" and depth == 0 and i > start:
            terms.append(text[start:i])
            start = i
    if depth != 0:
        raise ParseError("unbalanced brackets", {"text": text})
    terms.append(text[start:])
    return [t[1:] if t.startswith("+") else t for t in terms]


def _parse_coeff(text: str) -> GoldenRational:
    if text in ("", "+"):
        return ONE
    if text == "-":
        return -ONE
    sign = 1
    body = text
    if body[0] in "+-":
        sign = -1 if body[0] == "-" else 1
        body = body[1:]
    if body.startswith("(") and body.endswith(")"):
        return sign * parse_golden(body[1:-1])
    return sign * parse_golden(body)


def parse_key(text: str, point_keys: bool = False) -> BasisKey:
    if text == "C":
        return CENTRAL
    if not (text.startswith("L_{") and text.endswith("}")):
        raise ParseError("malformed generator", {"text": text})
    inner = text[3:-1]
    if not point_keys and "t" not in inner:
        try:
            return ChainIndex(int(inner))
        except ValueError:
            raise ParseError("malformed generator index", {"text": text}) from None
    return Point(parse_golden(inner))


def _matching_open(text: str) -> int:
    depth = 0
    for i in range(len(text) - 1, -1, -1):
        if text[i] == ")":
            depth += 1
        elif text[i] == "(":
            depth -= 1
            if depth == 0:
                return i
    raise ParseError("unbalanced brackets", {"text": text})


def parse_element(text: str, point_keys: bool = False) -> AlgebraElement:
    s = text.strip().replace("−", "-").replace("τ", "t").replace(" ", "")
    if not s:
        raise ParseError("empty element", {"text": text})
    if s == "0":
        return ZERO_ELEMENT
    if s.endswith(")"):
        i = _matching_open(s)
        return elem_scale(_parse_coeff(s[:i]), parse_element(s[i + 1:-1], point_keys))
    pairs: List[Tuple[BasisKey, Coefficient]] = []
    for term in _split_terms(s):
        if term.endswith("C"):
            cut = len(term) - 1
        else:
            cut = term.find("L_{")
            if cut < 0:
                raise ParseError("term without generator", {"text": text, "term": term})
        pairs.append((parse_key(term[cut:], point_keys), _parse_coeff(term[:cut])))
    return AlgebraElement.from_terms(pairs)
