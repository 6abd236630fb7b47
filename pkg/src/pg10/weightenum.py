"""Exact weight-enumerator arithmetic for binary codes.

The order-10 plane work requires coefficients near 10^32, so everything is
arbitrary-precision integer (or rational during back-substitution), and the
transform divisions must come out exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

PG10_LENGTH = 111
PG10_DIMENSION = 56
PG10_CODE_SIZE = 1 << PG10_DIMENSION

# Forced low-weight coefficients of the order-10 plane code: the zero word,
# no configurations of 1..10 points, and the 111 lines as the weight-11 words.
PG10_FORCED_VALUES = {0: 1, 4: 0, 8: 0, 100: 111, 104: 0, 108: 0}

# The three coefficients the constraint system cannot determine on its own;
# each was established by exhaustive computer search (this package re-proves
# the weight-15 one).
PG10_SEARCHED_PINS = {12: 0, 15: 0, 16: 0}

STANDARD_PINS = {
    0: 1,
    **{i: 0 for i in range(1, 11)},
    11: 111,
    **PG10_SEARCHED_PINS,
}


class NonIntegralResult(ArithmeticError):
    """A transform division did not come out exact."""


class InconsistentPins(ValueError):
    """Pinned values contradict the constraint system."""


class UnderDetermined(ValueError):
    """Pins leave at least one degree of freedom."""


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_N of a code's weight distribution."""

    length: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.length + 1:
            raise ValueError("need exactly length+1 coefficients")

    def total(self) -> int:
        return sum(self.coefficients)

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]


def krawtchouk(n: int, j: int, w: int) -> int:
    """Coefficient of x^(n-j) y^j in (x+y)^(n-w) (x-y)^w."""
    lo = max(0, j - (n - w))
    hi = min(w, j)
    return sum((-1) ** k * comb(w, k) * comb(n - w, j - k) for k in range(lo, hi + 1))


def macwilliams_transform(w: WeightEnumerator, code_size: int) -> WeightEnumerator:
    """Dual distribution via W(x+y, x-y) / code_size, exactly."""
    if code_size != w.total():
        raise ValueError("code_size must equal the coefficient total")
    n = w.length
    out = []
    for j in range(n + 1):
        acc = sum(a * krawtchouk(n, j, i) for i, a in enumerate(w.coefficients) if a)
        q, r = divmod(acc, code_size)
        if r:
            raise NonIntegralResult(
                f"coefficient {j} of the transform is not integral"
            )
        out.append(q)
    return WeightEnumerator(length=n, coefficients=tuple(out))


def enumerator_from_weights(length: int, weights) -> WeightEnumerator:
    """Tally a weight multiset into an enumerator."""
    coeff = [0] * (length + 1)
    for w in weights:
        coeff[w] += 1
    return WeightEnumerator(length=length, coefficients=tuple(coeff))


@dataclass(frozen=True)
class ExactLinearSystem:
    """Integer linear system over the unknowns A_0, A_4, ..., A_108."""

    unknown_weights: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]


def build_pg10_system() -> ExactLinearSystem:
    """Constraint system for the order-10 plane's weight distribution.

    The multiples-of-4 part of the distribution is the dual code's whole
    distribution, so it must equal the transform of the full enumerator by
    1/2^56.  Substituting A_{4i+3} = A_{111-(4i+3)} leaves the 28 unknowns
    A_0, A_4, ..., A_108 and one (homogeneous) equation per power of y,
    plus the forced low-weight values as inhomogeneous rows.
    """
    n = PG10_LENGTH
    unknowns = tuple(range(0, n + 1, 4))
    rows = []
    rhs = []
    for j in range(n + 1):
        row = []
        for m, w4 in enumerate(unknowns):
            c = krawtchouk(n, j, w4) + krawtchouk(n, j, n - w4)
            if j == w4:
                c -= PG10_CODE_SIZE
            row.append(c)
        rows.append(tuple(row))
        rhs.append(0)
    for w4, value in sorted(PG10_FORCED_VALUES.items()):
        row = [0] * len(unknowns)
        row[unknowns.index(w4)] = 1
        rows.append(tuple(row))
        rhs.append(value)
    return ExactLinearSystem(unknown_weights=unknowns, rows=tuple(rows), rhs=tuple(rhs))


def _fraction_free_echelon(
    rows: list[list[int]],
) -> tuple[list[list[int]], list[int]]:
    """In-place fraction-free row echelon form; returns (matrix, pivot columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    prev = 1
    r = 0
    pivot_cols = []
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, nrows):
            if not any(rows[i]):
                continue
            lead = rows[i][c]
            for j in range(c, ncols):
                rows[i][j] = (rows[i][j] * rows[r][c] - lead * rows[r][j]) // prev
        prev = rows[r][c]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivot_cols


def system_rank(system: ExactLinearSystem) -> int:
    rows = [list(r) for r in system.rows]
    _, pivot_cols = _fraction_free_echelon(rows)
    return len(pivot_cols)


def system_nullity(system: ExactLinearSystem) -> int:
    return len(system.unknown_weights) - system_rank(system)


def _normalize_pins(pins: dict[int, int]) -> dict[int, int]:
    """Map pinned indices onto the A_{4i} unknowns via A_i = A_{111-i}."""
    normalized: dict[int, int] = {}
    for idx, value in pins.items():
        if not 0 <= idx <= PG10_LENGTH:
            raise ValueError(f"pin index {idx} out of range")
        if idx % 4 in (1, 2):
            if value != 0:
                raise InconsistentPins(
                    f"A_{idx} is forced to 0 by the weight parity, not {value}"
                )
            continue
        target = idx if idx % 4 == 0 else PG10_LENGTH - idx
        if target in normalized and normalized[target] != value:
            raise InconsistentPins(
                f"pins assign A_{target} both {normalized[target]} and {value}"
            )
        normalized[target] = value
    return normalized


def solve_weight_distribution(
    system: ExactLinearSystem, pins: dict[int, int]
) -> WeightEnumerator:
    """Unique exact solution of system + pins, expanded to A_0..A_111.

    Raises UnderDetermined when the pins leave free unknowns and
    InconsistentPins when they contradict the system.
    """
    unknowns = system.unknown_weights
    col = {w: i for i, w in enumerate(unknowns)}
    aug = [list(row) + [b] for row, b in zip(system.rows, system.rhs)]
    for w4, value in sorted(_normalize_pins(pins).items()):
        row = [0] * (len(unknowns) + 1)
        row[col[w4]] = 1
        row[-1] = value
        aug.append(row)

    echelon, pivot_cols = _fraction_free_echelon(aug)
    rank = len(pivot_cols)
    # a pivot in the augmented column marks an inconsistency
    if pivot_cols and pivot_cols[-1] == len(unknowns):
        raise InconsistentPins("pins contradict the constraint system")
    for i in range(rank, len(echelon)):
        if echelon[i][-1]:
            raise InconsistentPins("pins contradict the constraint system")
    if rank < len(unknowns):
        raise UnderDetermined(
            f"{len(unknowns) - rank} degrees of freedom remain; add pins"
        )

    solution: list[Fraction] = [Fraction(0)] * len(unknowns)
    for i in reversed(range(rank)):
        c = pivot_cols[i]
        acc = Fraction(echelon[i][-1])
        for j in range(c + 1, len(unknowns)):
            if echelon[i][j]:
                acc -= echelon[i][j] * solution[j]
        solution[c] = acc / echelon[i][c]

    values = []
    for frac in solution:
        if frac.denominator != 1:
            raise NonIntegralResult("solution is not integral")
        values.append(int(frac))

    coeff = [0] * (PG10_LENGTH + 1)
    for w4, v in zip(unknowns, values):
        coeff[w4] = v
        coeff[PG10_LENGTH - w4] = v
    return WeightEnumerator(length=PG10_LENGTH, coefficients=tuple(coeff))


def residuals(system: ExactLinearSystem, enum: WeightEnumerator) -> list[int]:
    """Exact row residuals of an A_0..A_111 table against the system."""
    values = [enum[w] for w in system.unknown_weights]
    return [
        sum(c * v for c, v in zip(row, values)) - b
        for row, b in zip(system.rows, system.rhs)
    ]


def weight_table_csv(enum: WeightEnumerator) -> str:
    """CSV "i,A_i" with exact decimal values."""
    out = ["i,A_i"]
    out += [f"{i},{enum[i]}" for i in range(enum.length + 1)]
    return "\n".join(out) + "\n"


def parse_weight_table_csv(text: str) -> WeightEnumerator:
    rows = [r for r in text.splitlines() if r.strip()]
    if rows and rows[0].lower().startswith("i,"):
        rows = rows[1:]
    pairs = [tuple(int(tok) for tok in r.split(",")) for r in rows]
    length = max(i for i, _ in pairs)
    coeff = [0] * (length + 1)
    for i, a in pairs:
        coeff[i] = a
    return WeightEnumerator(length=length, coefficients=tuple(coeff))
