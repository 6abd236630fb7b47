"""Binary linear codes over GF(2) with words packed into Python ints.

Bit i of a word corresponds to point i.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .incidence import IncidenceStructure

ENUMERATION_DIMENSION_LIMIT = 24


@dataclass(frozen=True)
class Word:
    """A fixed-length GF(2) vector."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits out of range for word length")

    @classmethod
    def from_support(cls, length: int, support) -> Word:
        bits = 0
        for p in support:
            bits |= 1 << p
        return cls(length, bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.length) if (self.bits >> p) & 1)

    def __xor__(self, other: Word) -> Word:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return Word(self.length, self.bits ^ other.bits)

    def __and__(self, other: Word) -> Word:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return Word(self.length, self.bits & other.bits)

    def dot(self, other: Word) -> int:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def to_hex(self) -> str:
        return format(self.bits, f"0{(self.length + 3) // 4}x")

    @classmethod
    def from_hex(cls, length: int, text: str) -> Word:
        return cls(length, int(text, 16))


@dataclass(frozen=True)
class LinearCode:
    """Row space of a set of generators, with its reduced echelon basis."""

    length: int
    generators: tuple[Word, ...]
    basis: tuple[Word, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _echelon(bit_rows: list[int]) -> dict[int, int]:
    """Reduced echelon form; maps pivot column -> row bits."""
    pivots: dict[int, int] = {}
    for v in bit_rows:
        while v:
            low = (v & -v).bit_length() - 1
            if low in pivots:
                v ^= pivots[low]
            else:
                pivots[low] = v
                break
    # back-substitute so each pivot column appears in exactly one row
    for col in sorted(pivots, reverse=True):
        row = pivots[col]
        for other in pivots:
            if other != col and (pivots[other] >> col) & 1:
                pivots[other] ^= row
    return pivots


def _reduce(v: int, pivots: dict[int, int]) -> int:
    while v:
        low = (v & -v).bit_length() - 1
        if low not in pivots:
            break
        v ^= pivots[low]
    return v


def row_space(generators: list[Word]) -> LinearCode:
    """Echelonize the generators over GF(2)."""
    if not generators:
        return LinearCode(length=0, generators=(), basis=())
    length = generators[0].length
    if any(g.length != length for g in generators):
        raise ValueError("generators have mixed lengths")
    pivots = _echelon([g.bits for g in generators])
    basis = tuple(Word(length, pivots[c]) for c in sorted(pivots))
    return LinearCode(length=length, generators=tuple(generators), basis=basis)


def zero_code(length: int) -> LinearCode:
    """The code containing only the zero word."""
    return LinearCode(length=length, generators=(Word(length, 0),), basis=())


def contains(code: LinearCode, x: Word) -> bool:
    if x.length != code.length:
        return False
    pivots = {(b.bits & -b.bits).bit_length() - 1: b.bits for b in code.basis}
    return _reduce(x.bits, pivots) == 0


def enumerate_codewords(code: LinearCode) -> list[Word]:
    """All 2^dim codewords, ascending as packed integers."""
    if code.dimension > ENUMERATION_DIMENSION_LIMIT:
        raise ValueError(
            f"dimension {code.dimension} exceeds enumeration limit "
            f"{ENUMERATION_DIMENSION_LIMIT}"
        )
    words = [0]
    for b in code.basis:
        words += [w ^ b.bits for w in words]
    return [Word(code.length, w) for w in sorted(words)]


def dual_code(code: LinearCode) -> LinearCode:
    """Orthogonal complement; dim = length - dim(code)."""
    n = code.length
    pivots = _echelon([b.bits for b in code.basis])
    pivot_cols = sorted(pivots)
    free_cols = [c for c in range(n) if c not in pivots]
    gens = []
    for f in free_cols:
        v = 1 << f
        for c in pivot_cols:
            if (pivots[c] >> f) & 1:
                v |= 1 << c
        gens.append(Word(n, v))
    if not gens:
        return zero_code(n)
    return row_space(gens)


def intersection_code(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """Basis of the intersection of two codes (Zassenhaus block elimination)."""
    if c1.length != c2.length:
        raise ValueError("length mismatch")
    n = c1.length
    # rows (u | u) and (w | 0); left block in the low bit positions so the
    # echelon pivots clear it first, leaving intersection rows on the right
    rows = [b.bits | (b.bits << n) for b in c1.basis]
    rows += [b.bits for b in c2.basis]
    pivots = _echelon(rows)
    mask = (1 << n) - 1
    gens = [Word(n, row >> n) for col, row in pivots.items() if col >= n]
    if not gens:
        return zero_code(n)
    return row_space(gens)


def is_even_line_sum(code: LinearCode, x: Word) -> bool:
    """Whether x is a sum of an even number of the code's generators.

    Well-defined whenever every dependency among the generators has even
    size, which holds for the line sets of even-order planes.
    """
    n = code.length
    if x.length != n:
        raise ValueError("length mismatch")
    # track representation parity in an extra column
    parity_bit = 1 << n
    pivots = _echelon([g.bits | parity_bit for g in code.generators])
    residue = x.bits
    while residue:
        low = (residue & -residue).bit_length() - 1
        if low not in pivots:
            break
        residue ^= pivots[low]
    if residue == 0:
        return True
    if residue == parity_bit:
        return False
    raise ValueError("word is not in the code")


def plane_code(plane: IncidenceStructure) -> LinearCode:
    """The GF(2) row space of a plane's incidence matrix."""
    gens = [Word.from_support(plane.num_points, line) for line in plane.lines]
    return row_space(gens)


def odd_intersection_predicate(plane: IncidenceStructure, x: Word) -> bool:
    """Whether every line of the plane meets x in an odd number of points."""
    code = plane_code(plane)
    if not contains(code, x):
        raise ValueError("word is not in the plane's code")
    return all(
        (x.bits & _line_bits(plane, i)).bit_count() & 1 for i in range(plane.num_lines)
    )


def _line_bits(plane: IncidenceStructure, i: int) -> int:
    bits = 0
    for p in plane.lines[i]:
        bits |= 1 << p
    return bits


def find_hyperovals(plane: IncidenceStructure) -> list[tuple[int, ...]]:
    """All (n+2)-point sets with no 3 collinear, for even plane order n."""
    n = plane.order
    if n % 2:
        raise ValueError("hyperovals require even order")
    line_masks = [_line_bits(plane, i) for i in range(plane.num_lines)]
    out = []
    for pts in combinations(range(plane.num_points), n + 2):
        mask = 0
        for p in pts:
            mask |= 1 << p
        if all((mask & lm).bit_count() <= 2 for lm in line_masks):
            out.append(pts)
    return out


def serialize_codewords(code: LinearCode, words: list[Word]) -> str:
    """Header "N dim count" then one hex word per line."""
    out = [f"{code.length} {code.dimension} {len(words)}"]
    out += [w.to_hex() for w in words]
    return "\n".join(out) + "\n"


def parse_codewords(text: str) -> tuple[int, int, list[Word]]:
    rows = [r for r in text.splitlines() if r.strip()]
    length, dim, count = (int(tok) for tok in rows[0].split())
    words = [Word.from_hex(length, r) for r in rows[1:]]
    if len(words) != count:
        raise ValueError("codeword count mismatch")
    return length, dim, words
