from __future__ import annotations

from fractions import Fraction

import pytest

from fibalg.engine import (
    ChainSpec,
    FormatError,
    GoldenRational,
    IndexOutsideWindow,
    JordanSpec,
    L,
    LP,
    ParseError,
    PreconditionError,
    TruncationSpec,
    check_commutativity,
    check_idempotence,
    check_jordan_identity,
    check_no_identity,
    check_proper_ideal,
    check_round_trip,
    check_sum_rule,
    check_truncated_axioms,
    export_structure_constants,
    jordan,
    jordan_product,
    table_from_dict,
    table_to_dict,
    truncated_product,
    zero_map_directions,
)
from fibalg.engine.jordan import check_monotone_zero_maps, check_point_agreement, jordan_product_points, rebuild_product, to_indices
from fibalg.engine.serialize import (
    CSV_HEADER,
    element_from_list,
    element_to_list,
    table_from_csv_rows,
    table_to_csv_rows,
)
from tests.harness.checks import assert_clean

J10 = JordanSpec(ChainSpec())
HALF = Fraction(1, 2)


def test_product_values():
    assert jordan_product(J10, 1, 2) == L(-1, HALF) + L(4, HALF)
    assert jordan_product(J10, -4, -2) == L(-7, HALF) + L(1, HALF)
    assert jordan_product(J10, 3, 3) == L(3)


def test_product_extends_bilinearly():
    assert jordan(J10, L(1) + L(2), L(2)) == jordan_product(J10, 1, 2) + L(2)


def test_point_form_agrees_with_indices():
    x, y = GoldenRational(1), GoldenRational(1, 1)
    value = jordan_product_points(J10, x, y)
    assert value == LP(GoldenRational(0, -1), HALF) + LP(GoldenRational(2, 2), HALF)
    assert to_indices(J10, value) == jordan_product(J10, 0, 1)
    assert_clean("point agreement", check_point_agreement(J10, -6, 6))


@pytest.mark.parametrize("alpha", [Fraction(1), Fraction(0), Fraction(1, 2), Fraction(3, 7)])
def test_axioms_hold_on_every_chain(alpha):
    spec = JordanSpec(ChainSpec(alpha))
    assert_clean("commutativity", check_commutativity(spec, -8, 8))
    assert_clean("idempotence", check_idempotence(spec, -8, 8))
    assert_clean("sum rule", check_sum_rule(spec, -15, 15))
    assert_clean("jordan identity", check_jordan_identity(spec, -6, 6))


def test_zero_maps_are_monotone():
    assert zero_map_directions(J10, -10, 10) == {"zero_left": "decreasing", "zero_right": "increasing"}
    assert check_monotone_zero_maps(J10, -10, 10)
    with pytest.raises(PreconditionError):
        zero_map_directions(J10, 2, 2)


def test_no_identity_and_proper_ideal():
    assert check_no_identity(J10, 12, 4)
    assert check_proper_ideal(J10, 12)
    with pytest.raises(PreconditionError):
        check_no_identity(J10, 4, 4)
    with pytest.raises(PreconditionError):
        check_proper_ideal(J10, 1)


def test_truncation_modes():
    zero = TruncationSpec(n_max=4, mode="zero-product")
    drop = TruncationSpec(n_max=4, mode="drop-term")
    assert truncated_product(zero, -4, -2) == L(0, 0)
    assert not truncated_product(zero, -4, -2)
    assert truncated_product(drop, -4, -2) == L(1, HALF)
    assert truncated_product(zero, 1, 2) == jordan_product(J10, 1, 2)
    with pytest.raises(IndexOutsideWindow):
        truncated_product(zero, 5, 0)
    with pytest.raises(PreconditionError):
        TruncationSpec(n_max=-1)
    with pytest.raises(ParseError):
        TruncationSpec(mode="clip")


@pytest.mark.parametrize("mode", ["zero-product", "drop-term"])
def test_truncations_stay_commutative(mode):
    report = check_truncated_axioms(TruncationSpec(n_max=4, mode=mode))
    assert report.commutative
    assert report.checked_pairs == 81
    assert not [w for w in report.witnesses if w["code"] == "commutativity"]
    assert report.to_dict()["commutative"] is True


def test_structure_constants_export():
    single = export_structure_constants(TruncationSpec(n_max=0))
    assert single.entries == ((0, 0, 0, GoldenRational(1)),)

    table = export_structure_constants(TruncationSpec(n_max=5, mode="drop-term"))
    assert table.is_symmetric()
    assert table.constant(4, 1, 2) == HALF
    assert table.constant(9, 1, 2) == 0
    assert rebuild_product(table, 1, 2) == truncated_product(table.spec, 1, 2)
    assert rebuild_product(table, 2, 1) == rebuild_product(table, 1, 2)
    assert_clean("round trip", check_round_trip(table))
    assert table_from_dict(table_to_dict(table)) == table
    rows = table_to_csv_rows(table)
    assert rows[0] == CSV_HEADER
    assert all(int(r[1]) <= int(r[2]) for r in rows[1:])
    assert table_from_csv_rows(rows, table.chain, table.n_max, table.mode) == table


def test_table_import_rejects_bad_documents():
    doc = table_to_dict(export_structure_constants(TruncationSpec(n_max=2)))
    with pytest.raises(FormatError):
        table_from_dict(dict(doc, algebra="witt"))
    with pytest.raises(FormatError):
        table_from_dict(dict(doc, mode="clip"))
    with pytest.raises(FormatError):
        table_from_dict(dict(doc, constants=[{"i": 0, "j": 2, "k": 1, "value": {"p": 1}}]))
    with pytest.raises(FormatError):
        table_from_dict(dict(doc, constants=[{"i": 0, "j": 0, "k": 0, "value": {"p": 1, "d": 0}}]))
    with pytest.raises(FormatError):
        table_from_csv_rows([["a", "b"]], ChainSpec(), 2, "zero-product")
    with pytest.raises(FormatError):
        table_from_csv_rows([CSV_HEADER, ["0", "0", "x", "1", "0", "1"]], ChainSpec(), 2, "zero-product")


def test_element_documents():
    e = L(1, HALF) + L(-7, GoldenRational(1, 1))
    assert element_from_list(element_to_list(e)) == e
    with pytest.raises(FormatError):
        element_from_list([{"key": {"bogus": 1}, "coeff": {"p": 1}}])
