"""The forced line structure on 111 points induced by a weight-15 word.

Assuming the order-10 plane's code had a word of 15 points, those points
(labelled 1..15) are pairwise joined by 6 "heavy" lines meeting the word in
5 points and 15 "triple" lines meeting it in 3; the remaining 90 lines meet
it once.  Up to relabelling the heavy/triple incidences are completely
forced, and this module builds that structure together with the symmetric
group that permutes it.

Point labels follow the published tables: 1..15 for the word's points,
16..75 for the points shared by pairs of triple lines, 76..111 for the
remaining heavy-line points.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import tables

A_POINTS = tuple(range(1, 16))
C_POINTS = tuple(range(16, 76))
B_POINTS = tuple(range(76, 112))

GROUP_SIZE_LIMIT = 10_000

_HEAVY_A = (
    (1, 2, 3, 4, 5),
    (1, 6, 7, 8, 9),
    (2, 6, 10, 11, 12),
    (3, 7, 10, 13, 14),
    (4, 8, 11, 13, 15),
    (5, 9, 12, 14, 15),
)

_TRIPLE_A = (
    (1, 10, 15),
    (1, 11, 14),
    (1, 12, 13),
    (2, 7, 15),
    (2, 8, 14),
    (2, 9, 13),
    (3, 6, 15),
    (3, 8, 12),
    (3, 9, 11),
    (4, 6, 14),
    (4, 7, 12),
    (4, 9, 10),
    (5, 6, 13),
    (5, 7, 11),
    (5, 8, 10),
)

_TRIPLE_C = (
    (16, 17, 18, 19, 20, 21, 22, 23),
    (24, 25, 26, 27, 28, 29, 30, 31),
    (32, 33, 34, 35, 36, 37, 38, 39),
    (24, 32, 40, 41, 42, 43, 44, 45),
    (16, 33, 46, 47, 48, 49, 50, 51),
    (17, 25, 52, 53, 54, 55, 56, 57),
    (26, 34, 46, 52, 58, 59, 60, 61),
    (18, 27, 40, 53, 62, 63, 64, 65),
    (19, 35, 41, 47, 66, 67, 68, 69),
    (20, 36, 42, 54, 62, 66, 70, 71),
    (21, 28, 48, 55, 58, 67, 72, 73),
    (29, 37, 43, 49, 59, 63, 74, 75),
    (22, 30, 44, 50, 64, 68, 72, 74),
    (23, 38, 51, 56, 60, 65, 70, 75),
    (31, 39, 45, 57, 61, 69, 71, 73),
)


@dataclass(frozen=True)
class CanonicalStructure:
    """Heavy and triple lines of the forced structure, as full point sets."""

    heavy: tuple[frozenset[int], ...]
    triple: tuple[frozenset[int], ...]

    @property
    def heavy_a(self) -> tuple[frozenset[int], ...]:
        return tuple(line & set(A_POINTS) for line in self.heavy)

    @property
    def triple_a(self) -> tuple[frozenset[int], ...]:
        return tuple(line & set(A_POINTS) for line in self.triple)

    @property
    def triple_c(self) -> tuple[frozenset[int], ...]:
        return tuple(line & set(C_POINTS) for line in self.triple)

    def heavy_through(self, p: int) -> tuple[int, ...]:
        return tuple(i for i, line in enumerate(self.heavy) if p in line)

    def triple_through(self, p: int) -> tuple[int, ...]:
        return tuple(i for i, line in enumerate(self.triple) if p in line)


def build_canonical_structure() -> CanonicalStructure:
    """Assemble the forced structure and re-verify every invariant."""
    heavy = tuple(
        frozenset(a).union(range(76 + 6 * i, 82 + 6 * i)) for i, a in enumerate(_HEAVY_A)
    )
    triple = tuple(frozenset(a) | frozenset(c) for a, c in zip(_TRIPLE_A, _TRIPLE_C))
    s = CanonicalStructure(heavy=heavy, triple=triple)
    _check_structure(s)
    return s


def _check_structure(s: CanonicalStructure) -> None:
    a_set = set(A_POINTS)
    for i, j in combinations(range(6), 2):
        meet = s.heavy[i] & s.heavy[j]
        if len(meet) != 1 or not meet <= a_set:
            raise AssertionError(f"heavy lines {i},{j} must meet in one word point")
    for p in A_POINTS:
        if len(s.heavy_through(p)) != 2:
            raise AssertionError(f"point {p} must lie on exactly two heavy lines")
        if len(s.triple_through(p)) != 3:
            raise AssertionError(f"point {p} must lie on exactly three triple lines")
    for p in C_POINTS:
        if len(s.triple_through(p)) != 2:
            raise AssertionError(f"point {p} must lie on exactly two triple lines")
    for p in B_POINTS:
        if len(s.heavy_through(p)) != 1:
            raise AssertionError(f"point {p} must lie on exactly one heavy line")
    cover: dict[frozenset[int], int] = {}
    for line in s.heavy + s.triple:
        for pair in combinations(sorted(line & a_set), 2):
            cover[frozenset(pair)] = cover.get(frozenset(pair), 0) + 1
    for pair in combinations(A_POINTS, 2):
        if cover.get(frozenset(pair), 0) != 1:
            raise AssertionError(f"word points {pair} not covered exactly once")
    for i, line in enumerate(s.triple):
        met = [h for h in range(6) if s.heavy[h] & line & a_set]
        if sorted(met) != list(range(6)):
            raise AssertionError(f"triple line {i} must meet every heavy line in A")


def transposition_labels(s: CanonicalStructure | None = None) -> dict[int, frozenset[int]]:
    """Each word point <-> the pair of heavy lines through it, as a transposition."""
    s = s or build_canonical_structure()
    labels = {}
    for p in A_POINTS:
        h = s.heavy_through(p)
        labels[p] = frozenset(i + 1 for i in h)
    return labels


def _conjugate(label: frozenset[int], i: int) -> frozenset[int]:
    swap = {i: i + 1, i + 1: i}
    return frozenset(swap.get(x, x) for x in label)


def tau_on_A(i: int, s: CanonicalStructure | None = None) -> dict[int, int]:
    """Action of conjugation by the swap (i, i+1) on the 15 word points."""
    if i not in range(1, 6):
        raise ValueError("generator index must be 1..5")
    s = s or build_canonical_structure()
    labels = transposition_labels(s)
    by_label = {lab: p for p, lab in labels.items()}
    return {p: by_label[_conjugate(lab, i)] for p, lab in labels.items()}


def _triple_matchings(s: CanonicalStructure) -> list[frozenset[frozenset[int]]]:
    """Each triple line as the perfect matching formed by its word points' labels."""
    labels = transposition_labels(s)
    out = []
    for line in s.triple_a:
        matching = frozenset(labels[p] for p in line)
        if len(matching) != 3 or len(frozenset().union(*matching)) != 6:
            raise AssertionError("triple line labels must form a perfect matching")
        out.append(matching)
    return out


def _c_point_lines(s: CanonicalStructure) -> dict[int, tuple[int, int]]:
    return {p: s.triple_through(p) for p in C_POINTS}


def tau_on_C(i: int, s: CanonicalStructure | None = None) -> dict[int, int]:
    """Action of conjugation by (i, i+1) on the 60 triple-line points.

    A point is the unique common point of two triple lines; its image is the
    common point of the two image lines.
    """
    if i not in range(1, 6):
        raise ValueError("generator index must be 1..5")
    s = s or build_canonical_structure()
    matchings = _triple_matchings(s)
    matching_index = {m: idx for idx, m in enumerate(matchings)}
    image = [
        matching_index[frozenset(_conjugate(t, i) for t in m)] for m in matchings
    ]
    pair_to_point = {}
    for p, lines in _c_point_lines(s).items():
        pair_to_point[frozenset(lines)] = p
    out = {}
    for p, (a, b) in _c_point_lines(s).items():
        out[p] = pair_to_point[frozenset((image[a], image[b]))]
    return out


Perm = tuple[int, ...]


def tau(i: int, s: CanonicalStructure | None = None) -> Perm:
    """Full generator permutation over points 0..75 (0 is an unused slot)."""
    s = s or build_canonical_structure()
    images = {0: 0}
    images.update(tau_on_A(i, s))
    images.update(tau_on_C(i, s))
    return tuple(images[p] for p in range(76))


def compose(g: Perm, h: Perm) -> Perm:
    """g after h."""
    return tuple(g[h[x]] for x in range(len(h)))


def identity_perm(size: int = 76) -> Perm:
    return tuple(range(size))


def generate_group(generators: list[Perm], max_size: int = GROUP_SIZE_LIMIT) -> list[Perm]:
    """Closure of the generators under composition, sorted for determinism."""
    for g in generators:
        if sorted(g) != list(range(len(g))):
            raise ValueError("generator is not a permutation")
    elements = set(generators)
    frontier = list(elements)
    while frontier:
        new = []
        for g in generators:
            for h in frontier:
                gh = compose(g, h)
                if gh not in elements:
                    elements.add(gh)
                    new.append(gh)
                    if len(elements) > max_size:
                        raise RuntimeError(f"group closure exceeded {max_size} elements")
        frontier = new
    return sorted(elements)


def group_G(s: CanonicalStructure | None = None) -> list[Perm]:
    """Group generated by all five conjugation generators (order 720)."""
    s = s or build_canonical_structure()
    return generate_group([tau(i, s) for i in range(1, 6)])


def group_G1(s: CanonicalStructure | None = None) -> list[Perm]:
    """Subgroup generated by generators 1, 3, 4, 5; fixes point 1 (order 48)."""
    s = s or build_canonical_structure()
    return generate_group([tau(i, s) for i in (1, 3, 4, 5)])


@dataclass(frozen=True)
class TableDiff:
    generator: int
    point: int
    derived: int
    published: int


def verify_tau_tables(
    s: CanonicalStructure | None = None,
    a_table: tuple[tuple[int, ...], ...] = tables.TAU_A_TABLE,
    c_table: tuple[tuple[int, ...], ...] = tables.TAU_C_TABLE,
) -> list[TableDiff]:
    """Diff the derived generator actions against published table transcriptions."""
    s = s or build_canonical_structure()
    diffs = []
    for i in range(1, 6):
        derived_a = tau_on_A(i, s)
        for p in A_POINTS:
            published = a_table[i - 1][p - 1]
            if derived_a[p] != published:
                diffs.append(TableDiff(i, p, derived_a[p], published))
        derived_c = tau_on_C(i, s)
        for p in C_POINTS:
            published = c_table[i - 1][p - 16]
            if derived_c[p] != published:
                diffs.append(TableDiff(i, p, derived_c[p], published))
    return diffs
