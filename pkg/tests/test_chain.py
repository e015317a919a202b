from __future__ import annotations

from fractions import Fraction

import pytest

from fibalg.engine import (
    ChainSpec,
    GoldenRational,
    NotDirichletInteger,
    NotInChain,
    ParseError,
    PreconditionError,
    chain_range,
    check_chain_equivalence,
    check_closure,
    check_gap_word,
    check_palindrome,
    check_qadd_index,
    check_quasiaddition,
    format_golden,
    gap_word,
    index_of,
    lift,
    membership,
    model_set,
    point,
    qadd,
    qadd_index,
    substitution_word,
)
from tests.harness.checks import assert_clean

F10 = ChainSpec()


def _values(spec, lo, hi):
    return [format_golden(p.value, ascii=True) for p in chain_range(spec, lo, hi)]


def test_default_chain_points():
    assert _values(F10, -4, 4) == ["-2-4t", "-1-3t", "-1-2t", "-t", "1", "1+t", "2+2t", "2+3t", "3+4t"]


def test_alpha_accepts_text_and_shifts_window():
    half = ChainSpec("1/2")
    assert half.alpha == Fraction(1, 2)
    assert half.window == (GoldenRational(-1, 0, 2), GoldenRational(1, 0, 2))
    assert not half.is_lie_compatible
    assert F10.is_lie_compatible
    assert ChainSpec(0).is_lie_compatible
    assert F10.label == "F_{1,0}"
    with pytest.raises(ParseError):
        ChainSpec(0.5)
    with pytest.raises(ParseError):
        ChainSpec("0.5")


def test_beta_translates_by_an_integer():
    shifted = ChainSpec(1, 2)
    for n in range(-5, 6):
        assert point(shifted, n).value == point(F10, n).value + 2


def test_membership_and_index():
    assert membership(F10, GoldenRational(2, 3)) == 1
    assert membership(F10, GoldenRational(0, 1)) == 0
    assert index_of(F10, GoldenRational(2, 3)) == 3
    assert index_of(F10, GoldenRational(-1, -3)) == -3
    with pytest.raises(NotInChain):
        index_of(F10, GoldenRational(0, 1))
    with pytest.raises(NotDirichletInteger):
        membership(F10, GoldenRational(1, 0, 2))


def test_empty_range_is_rejected():
    with pytest.raises(PreconditionError):
        chain_range(F10, 3, 2)
    with pytest.raises(PreconditionError):
        gap_word(F10, 2, 2)


def test_gap_word_is_a_substitution_factor():
    assert substitution_word(0) == "B"
    assert substitution_word(5) == "ABAABABA"
    assert gap_word(F10, -4, 4) == "ABAABABA"
    report = check_gap_word(F10)
    assert report["factor_found"]
    assert report["ratio_within_tolerance"]
    assert report["count_a"] + report["count_b"] == 10_000


def test_quasiaddition_values():
    assert qadd(GoldenRational(2, 2), GoldenRational(-1, -3)) == GoldenRational(7, 10)
    assert qadd(GoldenRational(-1, -2), GoldenRational(2, 3)) == GoldenRational(-6, -10)
    assert qadd(GoldenRational(1), GoldenRational(1, 1)) == GoldenRational(0, -1)
    x = GoldenRational(2, 3)
    assert qadd(x, x) == x


def test_qadd_index():
    assert qadd_index(F10, 0, 1) == -1
    assert qadd_index(F10, 1, 2) == -1
    for n in range(-6, 7):
        assert qadd_index(F10, n, n) == n


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2, 7)])
def test_quasiaddition_laws_hold(alpha):
    spec = ChainSpec(alpha)
    assert_clean("quasiaddition", check_quasiaddition(spec, -6, 6))
    assert_clean("closure", check_closure(spec, -8, 8))
    assert_clean("qadd index", check_qadd_index(spec, -8, 8))


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1, 2), Fraction(1)])
def test_window_and_formula_agree(alpha):
    assert_clean("chain equivalence", check_chain_equivalence(ChainSpec(alpha), 12, index_bound=60))


def test_palindrome_only_for_centred_window():
    assert_clean("palindrome", check_palindrome(ChainSpec("1/2"), -20, 20))
    assert check_palindrome(F10, -5, 5)


def test_lift_and_model_set():
    assert lift(GoldenRational(2, 3)) == (2, 3, GoldenRational(5, -3))
    with pytest.raises(NotDirichletInteger):
        lift(GoldenRational(1, 1, 2))
    assert model_set(F10, 10, 4) == [p.value for p in chain_range(F10, -4, 4)]
