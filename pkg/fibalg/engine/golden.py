"""Exact arithmetic in Q(sqrt 5) written as (p + q*tau) / d.

tau is the golden mean, the positive root of x^2 = x + 1. The Dirichlet
ring Z[tau] is the subring with d == 1. Order, sign and floor are decided
with integer arithmetic only: p + q*tau = ((2p + q) + q*sqrt5) / 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from typing import Literal, Optional, Union

from fibalg.engine.errors import ParseError

TAU_SYMBOL = "τ"
ASCII_TAU = "t"

Scalar = Union["GoldenRational", int, Fraction]
Ordering = Literal[-1, 0, 1]


def _sign_of(p: int, q: int) -> Ordering:
    a = 2 * p + q
    if q == 0:
        return 1 if a > 0 else (-1 if a < 0 else 0)
    if a >= 0 and q > 0:
        return 1
    if a <= 0 and q < 0:
        return -1
    # opposite signs: |a| vs |q|*sqrt5, never equal since sqrt5 is irrational
    if a > 0:
        return 1 if a * a > 5 * q * q else -1
    return 1 if 5 * q * q > a * a else -1


@total_ordering
@dataclass(frozen=True, eq=False)
class GoldenRational:
    p: int
    q: int = 0
    d: int = 1

    def __post_init__(self) -> None:
        p, q, d = int(self.p), int(self.q), int(self.d)
        if d == 0:
            raise ZeroDivisionError("GoldenRational denominator is zero")
        if d < 0:
            p, q, d = -p, -q, -d
        g = gcd(gcd(p, q), d)
        if g > 1:
            p, q, d = p // g, q // g, d // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_rational(cls, value: Union[int, Fraction]) -> GoldenRational:
        fr = Fraction(value)
        return cls(fr.numerator, 0, fr.denominator)

    @classmethod
    def coerce(cls, value: object) -> Optional[GoldenRational]:
        if isinstance(value, GoldenRational):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            return cls.from_rational(value)
        return None

    # --- structure -------------------------------------------------------

    @property
    def is_dirichlet_integer(self) -> bool:
        return self.d == 1

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def to_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.d)

    def star(self) -> GoldenRational:
        return GoldenRational(self.p + self.q, -self.q, self.d)

    def norm(self) -> Fraction:
        p, q = self.p, self.q
        return Fraction(p * p + p * q - q * q, self.d * self.d)

    def sign(self) -> Ordering:
        return _sign_of(self.p, self.q)

    def floor(self) -> int:
        a = 2 * self.p + self.q
        root = isqrt(5 * self.q * self.q)
        # floor(q*sqrt5); for q < 0 the product is irrational, so step one below -root
        s = root if self.q >= 0 else -root - 1
        k = (a + s) // (2 * self.d)
        while GoldenRational(k) > self:
            k -= 1
        while GoldenRational(k + 1) <= self:
            k += 1
        return k

    # --- arithmetic ------------------------------------------------------

    def __add__(self, other: object) -> GoldenRational:
        o = GoldenRational.coerce(other)
        if o is None:
            return NotImplemented
        return GoldenRational(self.p * o.d + o.p * self.d, self.q * o.d + o.q * self.d, self.d * o.d)

    def __radd__(self, other: object) -> GoldenRational:
        return self.__add__(other)

    def __neg__(self) -> GoldenRational:
        return GoldenRational(-self.p, -self.q, self.d)

    def __pos__(self) -> GoldenRational:
        return self

    def __sub__(self, other: object) -> GoldenRational:
        o = GoldenRational.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> GoldenRational:
        o = GoldenRational.coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> GoldenRational:
        o = GoldenRational.coerce(other)
        if o is None:
            return NotImplemented
        # (a + b t)(c + e t) = ac + be + (ae + bc + be) t, using t^2 = t + 1
        a, b, c, e = self.p, self.q, o.p, o.q
        return GoldenRational(a * c + b * e, a * e + b * c + b * e, self.d * o.d)

    def __rmul__(self, other: object) -> GoldenRational:
        return self.__mul__(other)

    def inverse(self) -> GoldenRational:
        n = self.p * self.p + self.p * self.q - self.q * self.q
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        return GoldenRational(self.d * (self.p + self.q), -self.d * self.q, n)

    def __truediv__(self, other: object) -> GoldenRational:
        o = GoldenRational.coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> GoldenRational:
        o = GoldenRational.coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # --- comparison ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        o = GoldenRational.coerce(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q and self.d == o.d

    def __lt__(self, other: object) -> bool:
        o = GoldenRational.coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(Fraction(self.p, self.d))
        return hash((self.p, self.q, self.d))

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def __repr__(self) -> str:
        return f"GoldenRational({self.p}, {self.q}, {self.d})"

    def __str__(self) -> str:
        return format_golden(self)


ZERO = GoldenRational(0)
ONE = GoldenRational(1)
TAU = GoldenRational(0, 1)
TAU_SQUARED = GoldenRational(1, 1)
SQRT5 = GoldenRational(-1, 2)


def add(a: GoldenRational, b: GoldenRational) -> GoldenRational:
    return a + b


def mul(a: GoldenRational, b: GoldenRational) -> GoldenRational:
    return a * b


def star(a: GoldenRational) -> GoldenRational:
    return a.star()


def compare(a: GoldenRational, b: GoldenRational) -> Ordering:
    return (a - b).sign()


def floor(a: GoldenRational) -> int:
    return a.floor()


# --- text form -----------------------------------------------------------


def _format_body(p: int, q: int, sym: str) -> str:
    if q == 0:
        return str(p)
    if q == 1:
        qs = sym
    elif q == -1:
        qs = "-" + sym
    else:
        qs = f"{q}{sym}"
    if p == 0:
        return qs
    if q > 0:
        return f"{p}+{qs}"
    return f"{p}{qs}"


def format_golden(x: GoldenRational, ascii: bool = False) -> str:
    sym = ASCII_TAU if ascii else TAU_SYMBOL
    body = _format_body(x.p, x.q, sym)
    if x.d == 1:
        return body
    if x.p and x.q:
        return f"({body})/{x.d}"
    return f"{body}/{x.d}"


_TERM = re.compile(r"[+-]?[^+-]+")
_INT_TERM = re.compile(r"[+-]?\d+")
_TAU_TERM = re.compile(r"([+-]?)(\d*)t")
_RATIONAL = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def _normalize(text: str) -> str:
    return text.strip().replace("−", "-").replace(TAU_SYMBOL, ASCII_TAU).replace(" ", "")


def parse_golden(text: str) -> GoldenRational:
    s = _normalize(text)
    if not s:
        raise ParseError("empty golden number", {"text": text})
    d = 1
    body = s
    if "/" in s:
        body, _, den = s.rpartition("/")
        if not den.isdigit() or int(den) == 0:
            raise ParseError("bad denominator", {"text": text})
        d = int(den)
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    terms = _TERM.findall(body)
    if not body or "".join(terms) != body:
        raise ParseError("malformed golden number", {"text": text})
    p = q = 0
    for term in terms:
        if _INT_TERM.fullmatch(term):
            p += int(term)
            continue
        m = _TAU_TERM.fullmatch(term)
        if m is None:
            raise ParseError("malformed golden term", {"text": text, "term": term})
        coeff = int(m.group(2)) if m.group(2) else 1
        q += -coeff if m.group(1) == "-" else coeff
    return GoldenRational(p, q, d)


def parse_rational(text: str) -> Fraction:
    s = _normalize(text)
    m = _RATIONAL.fullmatch(s)
    if m is None:
        raise ParseError("expected an exact rational like 1/2", {"text": text})
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError("zero denominator", {"text": text})
    return Fraction(int(m.group(1)), den)


def format_rational(value: Fraction) -> str:
    fr = Fraction(value)
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr.numerator}/{fr.denominator}"
