"""Plane construction, validation, exact determinants and the counting systems."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pg10 import incidence

# the published cyclic incidence matrix of the order-2 plane
CYCLIC_MATRIX = [
    [1, 1, 0, 1, 0, 0, 0],
    [0, 1, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 1, 0],
    [0, 0, 0, 1, 1, 0, 1],
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 1, 1],
    [1, 0, 1, 0, 0, 0, 1],
]


def test_fano_matches_cyclic_matrix(fano):
    assert incidence.incidence_matrix(fano) == CYCLIC_MATRIX


def test_fano_basic_shape(fano):
    assert fano.num_points == 7
    assert fano.num_lines == 7
    assert sorted(fano.lines[0]) == [0, 1, 3]


def test_fano_validates(fano):
    report = incidence.validate_projective_plane(fano)
    assert report.ok
    assert all(v == 0 for v in report.counts().values())


def test_duplicated_line_breaks_unique_meet(fano):
    lines = list(fano.lines)
    lines[1] = lines[0]
    broken = incidence.IncidenceStructure(order=2, num_points=7, lines=tuple(lines))
    report = incidence.validate_projective_plane(broken)
    assert not report.ok
    assert report.line_pair_violations >= 1


def test_flipped_bit_breaks_degrees(fano):
    lines = list(fano.lines)
    lines[0] = lines[0] - {1}
    broken = incidence.IncidenceStructure(order=2, num_points=7, lines=tuple(lines))
    report = incidence.validate_projective_plane(broken)
    assert not report.ok
    assert report.line_size_violations >= 1
    assert report.point_degree_violations >= 1


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_planes_validate(p):
    plane = incidence.construct_plane_prime(p)
    assert plane.num_points == p * p + p + 1
    assert incidence.validate_projective_plane(plane).ok


def test_order_two_plane_parameters():
    plane = incidence.construct_plane_prime(2)
    assert plane.num_points == 7
    assert plane.num_lines == 7
    assert all(len(line) == 3 for line in plane.lines)


@pytest.mark.parametrize("p", [0, 1, 4, 6, 9, 17])
def test_prime_construction_guards(p):
    with pytest.raises(ValueError):
        incidence.construct_plane_prime(p)


def test_gram_matrix_fano(fano):
    g = incidence.gram_matrix(fano)
    assert all(g[i][j] == (3 if i == j else 1) for i in range(7) for j in range(7))


def test_gram_matrix_order3(order3):
    g = incidence.gram_matrix(order3)
    n = order3.num_lines
    assert all(g[i][j] == (4 if i == j else 1) for i in range(n) for j in range(n))


def test_gram_rejects_degenerate():
    degenerate = incidence.IncidenceStructure(
        order=2, num_points=7, lines=(frozenset({0, 1, 3}),)
    )
    with pytest.raises(ValueError):
        incidence.gram_matrix(degenerate)


@pytest.mark.parametrize(
    "n,expected", [(2, 24), (3, 2916), (10, 11 * 10**55)]
)
def test_determinant_formula(n, expected):
    assert incidence.incidence_determinant_formula(n) == expected


def test_determinant_matches_formula(fano, order3):
    for plane in (fano, order3):
        det = incidence.exact_determinant(incidence.incidence_matrix(plane))
        assert abs(det) == incidence.incidence_determinant_formula(plane.order)


def test_determinant_small_cases():
    assert incidence.exact_determinant([[2, 1], [1, 2]]) == 3
    assert incidence.exact_determinant([[0, 1], [1, 0]]) == -1
    assert incidence.exact_determinant([[1, 2], [2, 4]]) == 0


@pytest.mark.parametrize(
    "w,expected", [(15, (90, 15, 6)), (19, (68, 37, 6)), (23, (50, 51, 10))]
)
def test_line_intersection_distribution(w, expected):
    d = incidence.line_intersection_distribution(w)
    assert (d.l1, d.l3, d.l5) == expected


def test_line_intersection_infeasible_cases():
    with pytest.raises(incidence.Infeasible):
        incidence.line_intersection_distribution(13)
    with pytest.raises(incidence.Infeasible):
        incidence.line_intersection_distribution(12)


def _brute_line_distribution(w):
    from math import comb

    sols = []
    for l5 in range(112):
        for l3 in range(112 - l5):
            l1 = 111 - l3 - l5
            if l1 + 3 * l3 + 5 * l5 == 11 * w and 3 * l3 + 10 * l5 == comb(w, 2):
                sols.append((l1, l3, l5))
    return sols


@given(st.integers(min_value=1, max_value=111))
def test_line_distribution_matches_enumeration(w):
    sols = _brute_line_distribution(w)
    try:
        d = incidence.line_intersection_distribution(w)
    except incidence.Infeasible:
        assert sols == []
    else:
        assert sols == [(d.l1, d.l3, d.l5)]


def test_point_degree_table_rows():
    rows = [(r.p1, r.p3, r.p5) for r in incidence.point_degree_table(18)]
    assert rows == [(2, 9, 0), (3, 7, 1), (4, 5, 2), (5, 3, 3), (6, 1, 4)]
    assert [(r.p1, r.p3, r.p5) for r in incidence.point_degree_table(0)] == [(11, 0, 0)]
    rows14 = [(r.p1, r.p3, r.p5) for r in incidence.point_degree_table(14)]
    assert rows14 == [(4, 7, 0), (5, 5, 1), (6, 3, 2), (7, 1, 3)]


def test_point_degree_table_rejects_odd():
    with pytest.raises(ValueError):
        incidence.point_degree_table(7)


@given(st.integers(min_value=0, max_value=22).map(lambda k: 2 * k))
def test_point_degree_table_complete(other):
    got = {(r.p1, r.p3, r.p5) for r in incidence.point_degree_table(other)}
    brute = {
        (p1, p3, p5)
        for p1 in range(12)
        for p3 in range(12)
        for p5 in range(12)
        if p1 + p3 + p5 == 11 and 2 * p3 + 4 * p5 == other
    }
    assert got == brute


def _two_squares(n):
    from math import isqrt

    return any(isqrt(n - a * a) ** 2 == n - a * a for a in range(isqrt(n) + 1))


@pytest.mark.parametrize("n,expected", [(6, False), (10, True), (4, True), (14, False), (12, True), (9, True)])
def test_bruck_ryser_cases(n, expected):
    assert incidence.bruck_ryser_admissible(n) is expected


@given(st.integers(min_value=2, max_value=400))
def test_bruck_ryser_matches_oracle(n):
    expected = True if n % 4 in (0, 3) else _two_squares(n)
    assert incidence.bruck_ryser_admissible(n) is expected


@pytest.mark.parametrize("p", [2, 3, 5])
def test_duality(p):
    plane = incidence.construct_plane_prime(p)
    assert incidence.validate_projective_plane(incidence.dual_structure(plane)).ok


def test_serialization_round_trip(fano, order3):
    for plane in (fano, order3):
        text = incidence.to_text(plane)
        back = incidence.from_text(text)
        assert back.order == plane.order
        assert back.num_points == plane.num_points
        assert back.lines == plane.lines
        assert incidence.to_text(back) == text


def test_serialization_header():
    text = incidence.to_text(incidence.fano_plane())
    assert text.splitlines()[0] == "2 7"
    assert text.splitlines()[1] == "0 1 3"


def test_distribution_dataclass_guards():
    with pytest.raises(ValueError):
        incidence.IntersectionDistribution(l1=1, l3=1, l5=1)
    with pytest.raises(ValueError):
        incidence.PointDegreeRow(p1=1, p3=1, p5=1)
