"""The forced heavy/triple structure and the conjugation group acting on it."""

import random
from itertools import combinations

import pytest

from pg10 import canonical, tables


def test_triple_line_rows(structure):
    assert sorted(structure.triple[0]) == [1, 10, 15] + list(range(16, 24))
    assert sorted(structure.heavy[5]) == [5, 9, 12, 14, 15] + list(range(106, 112))


def test_heavy_pairs_meet_in_word_points(structure):
    for i, j in combinations(range(6), 2):
        meet = structure.heavy[i] & structure.heavy[j]
        assert len(meet) == 1
        assert meet <= set(canonical.A_POINTS)


def test_point_degrees(structure):
    for p in canonical.A_POINTS:
        assert len(structure.heavy_through(p)) == 2
        assert len(structure.triple_through(p)) == 3
    for p in canonical.C_POINTS:
        assert len(structure.triple_through(p)) == 2
    for p in canonical.B_POINTS:
        assert len(structure.heavy_through(p)) == 1
        assert len(structure.triple_through(p)) == 0


def test_word_point_pairs_covered_once(structure):
    cover = {}
    for line in structure.heavy + structure.triple:
        for pair in combinations(sorted(line & set(canonical.A_POINTS)), 2):
            cover[pair] = cover.get(pair, 0) + 1
    assert all(
        cover.get(pair, 0) == 1 for pair in combinations(canonical.A_POINTS, 2)
    )


def test_transposition_labels(structure):
    labels = canonical.transposition_labels(structure)
    assert labels[1] == frozenset({1, 2})
    assert labels[10] == frozenset({3, 4})
    assert labels[15] == frozenset({5, 6})
    assert set(labels.values()) == {
        frozenset(p) for p in combinations(range(1, 7), 2)
    }


def test_tau_on_word_points(structure):
    assert canonical.tau_on_A(1, structure)[2] == 6
    assert canonical.tau_on_A(2, structure)[1] == 2
    assert canonical.tau_on_A(4, structure)[14] == 15
    for i in (1, 3, 4, 5):
        assert canonical.tau_on_A(i, structure)[1] == 1


def test_tau_tables_match_published(structure):
    for i in range(1, 6):
        derived_a = canonical.tau_on_A(i, structure)
        assert [derived_a[p] for p in canonical.A_POINTS] == list(tables.TAU_A_TABLE[i - 1])
        derived_c = canonical.tau_on_C(i, structure)
        assert [derived_c[p] for p in canonical.C_POINTS] == list(tables.TAU_C_TABLE[i - 1])


def test_tau_on_c_examples(structure):
    assert canonical.tau_on_C(4, structure)[16] == 24
    assert canonical.tau_on_C(2, structure)[41] == 18
    assert canonical.tau_on_C(5, structure)[75] == 73


def test_tau_index_guards(structure):
    with pytest.raises(ValueError):
        canonical.tau_on_A(0, structure)
    with pytest.raises(ValueError):
        canonical.tau_on_C(6, structure)


def test_verify_tau_tables_clean():
    assert canonical.verify_tau_tables() == []


def test_verify_tau_tables_reports_corruption(structure):
    corrupted = [list(row) for row in tables.TAU_C_TABLE]
    corrupted[2][10] += 1  # generator 3, point 26
    diffs = canonical.verify_tau_tables(
        structure, c_table=tuple(tuple(r) for r in corrupted)
    )
    assert len(diffs) == 1
    d = diffs[0]
    assert (d.generator, d.point) == (3, 26)
    assert d.published == d.derived + 1


def test_group_orders(group_g, group_g1):
    assert len(group_g) == 720
    assert len(group_g1) == 48
    assert all(g[1] == 1 for g in group_g1)
    assert set(group_g1) <= set(group_g)


def test_group_elements_are_permutations(group_g):
    for g in random.Random(0).sample(group_g, 10):
        assert sorted(g) == list(range(76))
        assert g[0] == 0


def test_generate_group_guards(structure):
    t1 = canonical.tau(1, structure)
    with pytest.raises(RuntimeError):
        canonical.generate_group([t1], max_size=1)
    with pytest.raises(ValueError):
        canonical.generate_group([(0, 1, 1)])


def _maps_structure(structure, g):
    heavy_a = {frozenset(line & set(canonical.A_POINTS)) for line in structure.heavy}
    if {frozenset(g[p] for p in h) for h in heavy_a} != heavy_a:
        return False
    triples = set(structure.triple)
    return {frozenset(g[p] for p in t) for t in triples} == triples


def test_generators_preserve_structure(structure):
    for i in range(1, 6):
        assert _maps_structure(structure, canonical.tau(i, structure))


def test_random_group_elements_preserve_structure(structure, group_g):
    for g in random.Random(1).sample(group_g, 10):
        assert _maps_structure(structure, g)


def test_tau4_is_involution(structure):
    t4 = canonical.tau(4, structure)
    assert canonical.compose(t4, t4) == canonical.identity_perm()
