"""The transform, the constraint system, and the solved order-10 table."""

from collections import Counter
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pg10 import gf2, tables, weightenum

FANO_ENUM = weightenum.WeightEnumerator(7, (1, 0, 0, 7, 7, 0, 0, 1))
FANO_DUAL_ENUM = weightenum.WeightEnumerator(7, (1, 0, 0, 0, 7, 0, 0, 0))


def distribution_of(code):
    weights = [w.weight() for w in gf2.enumerate_codewords(code)]
    return weightenum.enumerator_from_weights(code.length, weights)


def test_krawtchouk_base_cases():
    assert [weightenum.krawtchouk(7, j, 0) for j in range(8)] == [comb(7, j) for j in range(8)]
    assert [weightenum.krawtchouk(7, j, 7) for j in range(8)] == [
        (-1) ** j * comb(7, j) for j in range(8)
    ]


def test_transform_fano_matches_enumerated_dual(fano_code):
    assert distribution_of(fano_code) == FANO_ENUM
    dual_dist = distribution_of(gf2.dual_code(fano_code))
    assert weightenum.macwilliams_transform(FANO_ENUM, 16) == dual_dist == FANO_DUAL_ENUM


def test_transform_of_trivial_code():
    trivial = weightenum.WeightEnumerator(5, (1, 0, 0, 0, 0, 0))
    out = weightenum.macwilliams_transform(trivial, 1)
    assert out.coefficients == (1, 5, 10, 10, 5, 1)


def test_transform_biduality():
    once = weightenum.macwilliams_transform(FANO_ENUM, 16)
    assert weightenum.macwilliams_transform(once, 8) == FANO_ENUM


def test_transform_size_precondition():
    with pytest.raises(ValueError):
        weightenum.macwilliams_transform(FANO_ENUM, 8)


def test_transform_non_integral():
    fake = weightenum.WeightEnumerator(2, (1, 2, 0))
    with pytest.raises(weightenum.NonIntegralResult):
        weightenum.macwilliams_transform(fake, 3)


small_codes = st.lists(
    st.integers(min_value=0, max_value=255), min_size=1, max_size=6
).map(lambda gens: gf2.row_space([gf2.Word(8, g) for g in gens]))


@given(small_codes)
def test_transform_matches_enumerated_dual_for_random_codes(code):
    dist = distribution_of(code)
    dual_dist = distribution_of(gf2.dual_code(code))
    assert weightenum.macwilliams_transform(dist, 1 << code.dimension) == dual_dist


def test_system_shape(pg10_system):
    assert pg10_system.unknown_weights == tuple(range(0, 112, 4))
    assert len(pg10_system.rows) == 112 + len(weightenum.PG10_FORCED_VALUES)


def test_system_nullity_is_three(pg10_system):
    assert weightenum.system_nullity(pg10_system) == 3


def test_coefficients_need_big_integers():
    assert comb(111, 55) > 2**64


def test_solved_table_matches_published(solved_table):
    expected = tables.expected_weight_table()
    for i in range(112):
        assert solved_table[i] == expected[i], f"weight {i}"


def test_solved_table_key_values(solved_table):
    assert solved_table[19] == 24_675
    assert solved_table[55] == 10_841_059_295_003_634
    assert solved_table[20] == 386_010
    assert solved_table[23] == 18_864_495
    assert solved_table[15] == 0
    assert solved_table[12] == 0
    assert solved_table[16] == 0


def test_solved_table_total_and_symmetry(solved_table):
    assert solved_table.total() == 2**56
    assert all(solved_table[i] == solved_table[111 - i] for i in range(112))


def test_solved_table_satisfies_system(pg10_system, solved_table):
    assert all(r == 0 for r in weightenum.residuals(pg10_system, solved_table))


def test_dual_distribution_from_solved_table(solved_table):
    dual = weightenum.macwilliams_transform(solved_table, 2**56)
    assert all(a >= 0 for a in dual.coefficients)
    assert dual.total() == 2**55
    # dual = the multiples-of-4 part of the code's own distribution
    assert all(
        dual[i] == (solved_table[i] if i % 4 == 0 else 0) for i in range(112)
    )


def test_minimal_pins_suffice(pg10_system, solved_table):
    minimal = weightenum.solve_weight_distribution(
        pg10_system, weightenum.PG10_SEARCHED_PINS
    )
    assert minimal == solved_table


def test_dropping_the_weight15_pin_underdetermines(pg10_system):
    with pytest.raises(weightenum.UnderDetermined):
        weightenum.solve_weight_distribution(pg10_system, {12: 0, 16: 0})


def test_inconsistent_pins(pg10_system):
    bad = dict(weightenum.STANDARD_PINS)
    bad[19] = 7
    with pytest.raises(weightenum.InconsistentPins):
        weightenum.solve_weight_distribution(pg10_system, bad)


def test_parity_pin_validation(pg10_system):
    with pytest.raises(weightenum.InconsistentPins):
        weightenum.solve_weight_distribution(pg10_system, {13: 5})
    with pytest.raises(ValueError):
        weightenum.solve_weight_distribution(pg10_system, {300: 0})


def test_duplicate_dual_pins_conflict(pg10_system):
    with pytest.raises(weightenum.InconsistentPins):
        weightenum.solve_weight_distribution(pg10_system, {15: 0, 96: 1})


def test_csv_round_trip(solved_table):
    text = weightenum.weight_table_csv(solved_table)
    assert "19,24675" in text.splitlines()
    back = weightenum.parse_weight_table_csv(text)
    assert back == solved_table


def test_enumerator_guards():
    with pytest.raises(ValueError):
        weightenum.WeightEnumerator(3, (1, 0))
