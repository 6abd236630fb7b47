"""Finite projective planes as incidence structures, all arithmetic exact."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

PRIME_ORDER_LIMIT = 13


class Infeasible(ValueError):
    """The intersection-count system has no non-negative integer solution."""


@dataclass(frozen=True)
class IncidenceStructure:
    """Points 0..num_points-1 and lines given as point sets, with claimed order."""

    order: int
    num_points: int
    lines: tuple[frozenset[int], ...]

    @property
    def points(self) -> range:
        return range(self.num_points)

    @property
    def num_lines(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class ValidationReport:
    """Violation counts per plane axiom; all zero means the structure is a plane."""

    order: int
    size_violations: int
    line_size_violations: int
    point_degree_violations: int
    line_pair_violations: int
    point_pair_violations: int

    @property
    def ok(self) -> bool:
        return not (
            self.size_violations
            or self.line_size_violations
            or self.point_degree_violations
            or self.line_pair_violations
            or self.point_pair_violations
        )

    def counts(self) -> dict[str, int]:
        return {
            "size": self.size_violations,
            "line_size": self.line_size_violations,
            "point_degree": self.point_degree_violations,
            "line_pair": self.line_pair_violations,
            "point_pair": self.point_pair_violations,
        }


@dataclass(frozen=True)
class IntersectionDistribution:
    """How many lines meet a configuration in 1, 3 and 5 points."""

    l1: int
    l3: int
    l5: int

    def __post_init__(self) -> None:
        if self.l1 + self.l3 + self.l5 != 111:
            raise ValueError("line counts must total 111")


@dataclass(frozen=True)
class PointDegreeRow:
    """Single/triple/heavy line counts through one configuration point."""

    p1: int
    p3: int
    p5: int

    def __post_init__(self) -> None:
        if self.p1 + self.p3 + self.p5 != 11:
            raise ValueError("degrees through a point must total 11")


def fano_plane() -> IncidenceStructure:
    """The order-2 plane in its cyclic labelling: line i = {i, i+1, i+3} mod 7."""
    lines = tuple(frozenset({i, (i + 1) % 7, (i + 3) % 7}) for i in range(7))
    return IncidenceStructure(order=2, num_points=7, lines=lines)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def construct_plane_prime(p: int) -> IncidenceStructure:
    """Plane of prime order p via homogeneous coordinates over the integers mod p."""
    if not _is_prime(p):
        raise ValueError(f"order {p} is not prime")
    if p > PRIME_ORDER_LIMIT:
        raise ValueError(f"order {p} exceeds the construction limit {PRIME_ORDER_LIMIT}")
    # canonical representatives of the projective points/lines over Z/p
    reps = [(1, y, z) for y in range(p) for z in range(p)]
    reps += [(0, 1, z) for z in range(p)]
    reps.append((0, 0, 1))
    lines = []
    for a, b, c in reps:
        on = frozenset(
            i for i, (x, y, z) in enumerate(reps) if (a * x + b * y + c * z) % p == 0
        )
        lines.append(on)
    return IncidenceStructure(order=p, num_points=len(reps), lines=tuple(lines))


def validate_projective_plane(s: IncidenceStructure) -> ValidationReport:
    """Count violations of each plane axiom; violations are data, not errors."""
    n = s.order
    expected = n * n + n + 1
    size_violations = int(s.num_points != expected) + int(s.num_lines != expected)
    for line in s.lines:
        if any(p < 0 or p >= s.num_points for p in line):
            size_violations += 1

    line_size_violations = sum(1 for line in s.lines if len(line) != n + 1)

    degree = [0] * s.num_points
    for line in s.lines:
        for p in line:
            if 0 <= p < s.num_points:
                degree[p] += 1
    point_degree_violations = sum(1 for d in degree if d != n + 1)

    line_pair_violations = 0
    for i in range(s.num_lines):
        for j in range(i + 1, s.num_lines):
            if len(s.lines[i] & s.lines[j]) != 1:
                line_pair_violations += 1

    joins: dict[tuple[int, int], int] = {}
    for line in s.lines:
        pts = sorted(line)
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                key = (pts[a], pts[b])
                joins[key] = joins.get(key, 0) + 1
    point_pair_violations = sum(1 for c in joins.values() if c != 1)
    point_pair_violations += comb(s.num_points, 2) - len(joins)

    return ValidationReport(
        order=n,
        size_violations=size_violations,
        line_size_violations=line_size_violations,
        point_degree_violations=point_degree_violations,
        line_pair_violations=line_pair_violations,
        point_pair_violations=point_pair_violations,
    )


def incidence_matrix(s: IncidenceStructure) -> list[list[int]]:
    """0/1 matrix with rows = lines, columns = points."""
    return [[1 if p in line else 0 for p in s.points] for line in s.lines]


def gram_matrix(s: IncidenceStructure) -> list[list[int]]:
    """A A^T of the incidence matrix; equals nI + J for a plane of order n."""
    if not validate_projective_plane(s).ok:
        raise ValueError("structure is not a valid projective plane")
    return [[len(a & b) for b in s.lines] for a in s.lines]


def exact_determinant(matrix: list[list[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def incidence_determinant_formula(n: int) -> int:
    """|det A| = (n+1) * n^((n^2+n)/2) for a plane of order n."""
    if n < 2:
        raise ValueError("order must be at least 2")
    return (n + 1) * n ** ((n * n + n) // 2)


def line_intersection_distribution(w: int) -> IntersectionDistribution:
    """Solve the 1/3/5-point line counts for a weight-w configuration.

    The counts satisfy l1+l3+l5 = 111, l1+3*l3+5*l5 = 11w and
    3*l3+10*l5 = C(w,2); raises Infeasible when no non-negative integer
    solution exists.
    """
    if not 1 <= w <= 111:
        raise ValueError("weight must be between 1 and 111")
    # eliminate l1: 2*l3 + 4*l5 = 11w - 111
    s, rem = divmod(11 * w - 111, 2)
    if rem or s < 0:
        raise Infeasible(f"no integral line distribution for weight {w}")
    # substitute l3 = s - 2*l5 into 3*l3 + 10*l5 = C(w,2)
    l5, rem = divmod(comb(w, 2) - 3 * s, 4)
    if rem:
        raise Infeasible(f"no integral line distribution for weight {w}")
    l3 = s - 2 * l5
    l1 = 111 - l3 - l5
    if l1 < 0 or l3 < 0 or l5 < 0:
        raise Infeasible(f"negative line count for weight {w}")
    return IntersectionDistribution(l1=l1, l3=l3, l5=l5)


def point_degree_table(other_points: int) -> list[PointDegreeRow]:
    """All (p1,p3,p5) with p1+p3+p5 = 11 and 2*p3+4*p5 = other_points, by p5."""
    if other_points < 0 or other_points % 2:
        raise ValueError("other_points must be even and non-negative")
    s = other_points // 2
    rows = []
    for p5 in range(s // 2 + 1):
        p3 = s - 2 * p5
        p1 = 11 - p3 - p5
        if p1 >= 0:
            rows.append(PointDegreeRow(p1=p1, p3=p3, p5=p5))
    return rows


def _is_sum_of_two_squares(n: int) -> bool:
    return any(isqrt(n - a * a) ** 2 == n - a * a for a in range(isqrt(n) + 1))


def bruck_ryser_admissible(n: int) -> bool:
    """False iff n = 1,2 (mod 4) and n is not a sum of two squares."""
    if n < 2:
        raise ValueError("order must be at least 2")
    if n % 4 in (1, 2):
        return _is_sum_of_two_squares(n)
    return True


def dual_structure(s: IncidenceStructure) -> IncidenceStructure:
    """Swap the roles of points and lines (transpose the incidence matrix)."""
    lines = tuple(
        frozenset(i for i, line in enumerate(s.lines) if p in line) for p in s.points
    )
    return IncidenceStructure(order=s.order, num_points=s.num_lines, lines=lines)


def to_text(s: IncidenceStructure) -> str:
    """Serialize: first line "n N", then one sorted line of point indices per row."""
    out = [f"{s.order} {s.num_points}"]
    for line in s.lines:
        out.append(" ".join(str(p) for p in sorted(line)))
    return "\n".join(out) + "\n"


def from_text(text: str) -> IncidenceStructure:
    """Parse the plain-text serialization produced by to_text."""
    rows = [row for row in text.splitlines() if row.strip()]
    if not rows:
        raise ValueError("empty incidence structure")
    header = rows[0].split()
    if len(header) != 2:
        raise ValueError("header must be 'n N'")
    order, num_points = int(header[0]), int(header[1])
    lines = tuple(frozenset(int(tok) for tok in row.split()) for row in rows[1:])
    return IncidenceStructure(order=order, num_points=num_points, lines=lines)
