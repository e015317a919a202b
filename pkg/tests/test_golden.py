from __future__ import annotations

from fractions import Fraction

import pytest

from fibalg.engine import (
    ONE,
    SQRT5,
    TAU,
    GoldenRational,
    ParseError,
    compare,
    floor,
    format_golden,
    parse_golden,
    parse_rational,
)
from tests.harness.oracle import golden_stream, oracle_compare, oracle_floor


def test_tau_is_a_root_of_x2_minus_x_minus_1():
    assert TAU * TAU == TAU + 1
    assert SQRT5 * SQRT5 == 5
    assert 2 * TAU - 1 == SQRT5


def test_canonical_form():
    assert GoldenRational(2, 4, 2) == GoldenRational(1, 2)
    x = GoldenRational(1, 1, -2)
    assert (x.p, x.q, x.d) == (-1, -1, 2)
    assert GoldenRational(3, 0, 1) == 3
    assert hash(GoldenRational(2)) == hash(2)
    assert GoldenRational(1, 0, 2) == Fraction(1, 2)


def test_star_is_an_involution():
    assert TAU.star() == 1 - TAU
    x = GoldenRational(-7, 12, 5)
    assert x.star().star() == x
    assert (x * TAU).star() == x.star() * TAU.star()


def test_norm_and_inverse():
    assert TAU.norm() == -1
    assert TAU.inverse() == TAU - 1
    x = GoldenRational(3, -5, 7)
    assert x * x.inverse() == ONE
    assert x / x == ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GoldenRational(1) / GoldenRational(0)
    with pytest.raises(ZeroDivisionError):
        GoldenRational(1, 0, 0)


def test_order():
    assert compare(TAU, GoldenRational.from_rational(Fraction(8, 5))) == 1
    assert compare(TAU, GoldenRational.from_rational(Fraction(13, 8))) == -1
    assert compare(TAU, TAU) == 0
    assert GoldenRational(-1, -3) < GoldenRational(-1, -2) < -TAU < 0 < 1 < 1 + TAU
    assert sorted([TAU, ONE, -TAU, SQRT5]) == [-TAU, ONE, TAU, SQRT5]


@pytest.mark.parametrize(
    "x,expected",
    [
        (TAU, 1),
        (-TAU, -2),
        (GoldenRational(0, 3), 4),
        (GoldenRational(-1, -3), -6),
        (GoldenRational(5, 0, 2), 2),
        (GoldenRational(-5, 0, 2), -3),
        (SQRT5, 2),
        (GoldenRational(-1, 1), 0),
        (GoldenRational(1, -1), -1),
    ],
)
def test_floor(x, expected):
    assert floor(x) == expected


def test_format():
    assert format_golden(GoldenRational(-1, -3)) == "-1-3τ"
    assert format_golden(GoldenRational(-1, -3), ascii=True) == "-1-3t"
    assert format_golden(GoldenRational(0, -1)) == "-τ"
    assert format_golden(GoldenRational(2, 1), ascii=True) == "2+t"
    assert format_golden(GoldenRational(1, 1, 2)) == "(1+τ)/2"
    assert format_golden(GoldenRational(0, 1, 2)) == "τ/2"
    assert format_golden(GoldenRational(3, 0, 2)) == "3/2"
    assert format_golden(GoldenRational(0)) == "0"


def test_parse():
    assert parse_golden("−1−3τ") == GoldenRational(-1, -3)
    assert parse_golden("2t") == GoldenRational(0, 2)
    assert parse_golden("-t") == -TAU
    assert parse_golden("(1+t)/2") == GoldenRational(1, 1, 2)
    assert parse_golden("t/2") == GoldenRational(0, 1, 2)
    assert parse_golden(" 3 + 4t ") == GoldenRational(3, 4)


@pytest.mark.parametrize("text", ["", "1.5", "abc", "1+", "t/0", "2tt"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_golden(text)


def test_parse_rational_is_exact():
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("0") == 0
    for bad in ("0.5", "1e3", "1/0", "t"):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_agrees_with_decimal_oracle():
    values = list(golden_stream(7, 300))
    for a, b in zip(values, values[1:]):
        assert floor(a) == oracle_floor(a)
        assert compare(a, b) == oracle_compare(a, b)


def _triples(seed, count, bound=10**4):
    values = list(golden_stream(seed, 3 * count, bound))
    return list(zip(values[0::3], values[1::3], values[2::3]))


@pytest.mark.parametrize("seed", [11, 12])
def test_field_axioms_on_sampled_triples(seed):
    for a, b, c in _triples(seed, 200):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0


@pytest.mark.parametrize("seed", [21, 22])
def test_star_is_a_ring_homomorphism(seed):
    values = list(golden_stream(seed, 400, 10**4))
    for a, b in zip(values, values[1:]):
        assert (a + b).star() == a.star() + b.star()
        assert (a * b).star() == a.star() * b.star()


def test_floor_brackets_every_sampled_value():
    samples = list(golden_stream(31, 400)) + [GoldenRational(n) for n in range(-3, 4)]
    for a in samples:
        n = floor(a)
        assert GoldenRational(n) <= a < GoldenRational(n + 1)


def test_compare_matches_the_sign_of_the_difference():
    values = list(golden_stream(41, 400))
    pairs = list(zip(values, values[1:])) + [(v, v + 0) for v in values[:20]]
    for a, b in pairs:
        assert compare(a, b) == -(b - a).sign()
        assert compare(b, a) == -compare(a, b)


@pytest.mark.parametrize("ascii", [True, False])
def test_format_then_parse_recovers_sampled_values(ascii):
    for x in golden_stream(51, 500):
        assert parse_golden(format_golden(x, ascii=ascii)) == x


def test_oracle_decides_equality_from_the_decimal_values():
    assert oracle_compare(TAU * TAU, TAU + 1) == 0
    assert oracle_compare(SQRT5, 2 * TAU - 1) == 0
    assert oracle_compare(GoldenRational(2, 4, 2), GoldenRational(1, 2)) == 0
    assert oracle_compare(GoldenRational(610, 0), GoldenRational(0, 377)) == 1
    for x in golden_stream(61, 50):
        assert oracle_compare(x, x * ONE) == compare(x, x) == 0
