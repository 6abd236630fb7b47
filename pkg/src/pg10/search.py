"""Six-sets, K6 bundles, orbit reduction and the weight-15 extension search.

The 90 remaining lines of the hypothetical plane meet the weight-15 word
once, and each contributes 6 points shared with triple lines ("six-sets").
The six such lines through one word point form a bundle of pairwise
disjoint six-sets (a K6 in the disjointness graph).  The search fixes a
bundle through point 1 per symmetry orbit and tries to extend it with
bundles through points 10, 15, 11 and 14 under the intersection-count
constraints; exhausting every branch shows no weight-15 word exists.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .canonical import (
    A_POINTS,
    C_POINTS,
    CanonicalStructure,
    Perm,
    build_canonical_structure,
    group_G1,
)

SixSet = tuple[int, ...]

DEFAULT_ANCHOR_ORDER = (1, 10, 15, 11, 14)
STAGE_LABELS = ("UV", "UVW", "UVWX", "UVWXY")


@dataclass(frozen=True)
class K6Bundle:
    """Six pairwise-disjoint six-sets through one anchor point."""

    anchor: int | None
    members: tuple[SixSet, ...]

    def __post_init__(self) -> None:
        if len(self.members) != 6:
            raise ValueError("a bundle has exactly 6 members")


@dataclass(frozen=True)
class Orbit:
    representative: K6Bundle
    bundle_indices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.bundle_indices)


@dataclass(frozen=True)
class RepResult:
    """Chain counts found under one orbit representative, one per stage."""

    rep_index: int
    counts: tuple[int, ...]


@dataclass(frozen=True)
class SearchOutcome:
    anchor_order: tuple[int, ...]
    strict_b_consistency: bool
    per_rep: tuple[RepResult, ...]

    def stage_totals(self) -> tuple[int, ...]:
        stages = len(self.anchor_order) - 1
        totals = [0] * stages
        for rep in self.per_rep:
            for i, c in enumerate(rep.counts):
                totals[i] += c
        return tuple(totals)

    @property
    def distinct_u(self) -> int:
        """Representatives that extend through the first two stages."""
        depth = min(2, len(self.anchor_order) - 1)
        return sum(1 for rep in self.per_rep if rep.counts[depth - 1] > 0)

    @property
    def completions(self) -> int:
        return self.stage_totals()[-1]

    @property
    def a15_verified(self) -> bool:
        return self.completions == 0


@dataclass(frozen=True)
class SearchReport:
    six_set_count: int
    k6_count: int
    orbit_count: int
    orbit_sizes: tuple[int, ...]
    outcome: SearchOutcome


def six_set_mask(s: SixSet) -> int:
    mask = 0
    for p in s:
        mask |= 1 << p
    return mask


def generate_six_sets(anchor: int, s: CanonicalStructure | None = None) -> list[SixSet]:
    """All 6-point selections completing a candidate single line through anchor.

    A valid selection avoids the triple lines through the anchor and meets
    each of the other 12 triple lines exactly once, i.e. it is a perfect
    matching on those 12 lines where each usable point joins the two lines
    through it.
    """
    s = s or build_canonical_structure()
    if anchor not in A_POINTS:
        raise ValueError(f"anchor {anchor} is not a word point")
    through = set(s.triple_through(anchor))
    others = [t for t in range(15) if t not in through]
    slot = {t: k for k, t in enumerate(others)}
    point_slots: dict[int, tuple[int, int]] = {}
    points_on: list[list[int]] = [[] for _ in range(12)]
    for p in C_POINTS:
        lines = s.triple_through(p)
        if through & set(lines):
            continue
        a, b = (slot[t] for t in lines)
        point_slots[p] = (a, b)
        points_on[a].append(p)
        points_on[b].append(p)

    full = (1 << 12) - 1
    out: list[SixSet] = []
    chosen: list[int] = []

    def extend(covered: int) -> None:
        if covered == full:
            out.append(tuple(sorted(chosen)))
            return
        k = ((~covered & full) & -(~covered & full)).bit_length() - 1
        for p in points_on[k]:
            a, b = point_slots[p]
            other = b if a == k else a
            if (covered >> other) & 1:
                continue
            chosen.append(p)
            extend(covered | (1 << a) | (1 << b))
            chosen.pop()

    extend(0)
    return sorted(out)


def map_six_set(g: Perm, s: SixSet) -> SixSet:
    return tuple(sorted(g[p] for p in s))


def _disjoint_cliques6(masks: list[int]) -> list[tuple[int, ...]]:
    """Index 6-tuples of pairwise-disjoint masks, in ascending lex order."""
    n = len(masks)
    adj = [0] * n
    for i in range(n):
        mi = masks[i]
        acc = 0
        for j in range(i + 1, n):
            if not (mi & masks[j]):
                acc |= 1 << j
        adj[i] = acc
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(allowed: int, need: int) -> None:
        if need == 0:
            out.append(tuple(chosen))
            return
        while allowed:
            if allowed.bit_count() < need:
                return
            low = allowed & -allowed
            i = low.bit_length() - 1
            allowed ^= low
            chosen.append(i)
            extend(allowed & adj[i], need - 1)
            chosen.pop()

    extend((1 << n) - 1, 6)
    return out


def enumerate_k6(candidates: list[SixSet], anchor: int | None = None) -> list[K6Bundle]:
    """All bundles of 6 pairwise-disjoint candidates, members sorted."""
    cands = sorted(candidates)
    if any(cands[i] == cands[i + 1] for i in range(len(cands) - 1)):
        raise ValueError("candidates must be pairwise distinct")
    masks = [six_set_mask(c) for c in cands]
    return [
        K6Bundle(anchor=anchor, members=tuple(cands[i] for i in idxs))
        for idxs in _disjoint_cliques6(masks)
    ]


def orbit_partition(bundles: list[K6Bundle], group: list[Perm]) -> list[Orbit]:
    """Partition bundles into group orbits; representative = lex-smallest bundle."""
    if not bundles:
        return []
    universe = sorted({m for b in bundles for m in b.members})
    midx = {m: i for i, m in enumerate(universe)}
    keys = [tuple(sorted(midx[m] for m in b.members)) for b in bundles]
    pos: dict[tuple[int, ...], int] = {}
    for i, k in enumerate(keys):
        if k in pos:
            raise ValueError("bundles must be distinct")
        pos[k] = i

    index_maps = []
    for g in group:
        row = []
        for m in universe:
            img = midx.get(map_six_set(g, m))
            if img is None:
                raise ValueError("group does not map the bundle set into itself")
            row.append(img)
        index_maps.append(row)

    seen = [False] * len(bundles)
    orbits = []
    for start in range(len(bundles)):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        members = [start]
        while stack:
            cur = stack.pop()
            for row in index_maps:
                img_key = tuple(sorted(row[x] for x in keys[cur]))
                j = pos.get(img_key)
                if j is None:
                    raise ValueError("group does not map the bundle set into itself")
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
                    members.append(j)
        members.sort()
        rep = min(members, key=lambda x: keys[x])
        orbits.append(
            Orbit(representative=bundles[rep], bundle_indices=tuple(members))
        )
    orbits.sort(key=lambda o: o.representative.members)
    return orbits


def matching_pattern(p: int, q: int, s: CanonicalStructure | None = None) -> tuple[int, int]:
    """(ones, zeros) a six-set through p must score against a bundle through q.

    The zeros count the heavy lines through neither point: candidate lines
    through p and q meet each other either on such a heavy line or in a
    triple-line point, and the matching vector sees only the latter.
    """
    if p == q:
        raise ValueError("anchors must differ")
    if p not in A_POINTS or q not in A_POINTS:
        raise ValueError("anchors must be word points")
    s = s or build_canonical_structure()
    zeros = sum(1 for line in s.heavy if p not in line and q not in line)
    return (6 - zeros, zeros)


def matching_vector(s: SixSet, bundle: K6Bundle) -> tuple[int, ...]:
    pts = set(s)
    return tuple(len(pts.intersection(m)) for m in bundle.members)


def filter_by_matching(
    candidates: list[SixSet], bundle: K6Bundle, pattern: tuple[int, int]
) -> list[SixSet]:
    """Keep candidates whose matching vector is 0/1-valued with `ones` ones."""
    ones, zeros = pattern
    if ones + zeros != 6:
        raise ValueError("pattern must cover all 6 members")
    member_masks = [six_set_mask(m) for m in bundle.members]
    kept = []
    for cand in candidates:
        cm = six_set_mask(cand)
        total = 0
        for mm in member_masks:
            c = (cm & mm).bit_count()
            if c > 1:
                total = -1
                break
            total += c
        if total == ones:
            kept.append(cand)
    return kept


# mask-level pipeline -------------------------------------------------------

def _filter_masks(cand_masks: list[int], member_masks: tuple[int, ...], ones: int) -> list[int]:
    kept = []
    for cm in cand_masks:
        total = 0
        for mm in member_masks:
            c = (cm & mm).bit_count()
            if c > 1:
                total = -1
                break
            total += c
        if total == ones:
            kept.append(cm)
    return kept


def _columns_ok(
    new_members: tuple[int, ...],
    prior: list[tuple[int, tuple[int, ...]]],
    patterns: dict[tuple[int, int], tuple[int, int]],
    anchor: int,
) -> bool:
    # every member of every earlier bundle must be missed by exactly
    # `zeros` of the new members (its other meetings happen on heavy lines)
    for prev_anchor, prev_members in prior:
        zeros = patterns[(anchor, prev_anchor)][1]
        for mm in prev_members:
            if sum(1 for nm in new_members if not (nm & mm)) != zeros:
                return False
    return True


class _PipelineTables:
    """Immutable per-process tables shared by every work item."""

    def __init__(self, anchor_order: tuple[int, ...]):
        s = build_canonical_structure()
        self.anchor_order = anchor_order
        self.candidate_masks = {
            a: [six_set_mask(x) for x in generate_six_sets(a, s)] for a in anchor_order
        }
        self.patterns = {}
        for i, a in enumerate(anchor_order):
            for b in anchor_order[:i]:
                self.patterns[(a, b)] = matching_pattern(a, b, s)


def _search_rep(
    tables: _PipelineTables, rep_masks: tuple[int, ...], strict: bool
) -> tuple[int, ...]:
    anchors = tables.anchor_order
    stages = len(anchors) - 1
    counts = [0] * stages
    pools = {}
    for a in anchors[1:]:
        ones = tables.patterns[(a, anchors[0])][0]
        pools[a] = _filter_masks(tables.candidate_masks[a], rep_masks, ones)

    def extend(stage: int, prior: list[tuple[int, tuple[int, ...]]], pools: dict[int, list[int]]) -> None:
        a = anchors[stage]
        cand = pools[a]
        if len(cand) < 6:
            return
        for idxs in _disjoint_cliques6(cand):
            members = tuple(cand[i] for i in idxs)
            if strict and not _columns_ok(members, prior, tables.patterns, a):
                continue
            counts[stage - 1] += 1
            if stage == stages:
                continue
            new_pools = {}
            for b in anchors[stage + 1 :]:
                ones = tables.patterns[(b, a)][0]
                new_pools[b] = _filter_masks(pools[b], members, ones)
            extend(stage + 1, prior + [(a, members)], new_pools)

    extend(1, [(anchors[0], rep_masks)], pools)
    return tuple(counts)


_WORKER_TABLES: _PipelineTables | None = None
_WORKER_STRICT = False


def _init_worker(anchor_order: tuple[int, ...], strict: bool) -> None:
    global _WORKER_TABLES, _WORKER_STRICT
    _WORKER_TABLES = _PipelineTables(anchor_order)
    _WORKER_STRICT = strict


def _worker_job(item: tuple[int, tuple[int, ...]]) -> RepResult:
    rep_index, rep_masks = item
    assert _WORKER_TABLES is not None
    return RepResult(rep_index, _search_rep(_WORKER_TABLES, rep_masks, _WORKER_STRICT))


def run_extension_search(
    representatives: list[K6Bundle],
    stage_plan: tuple[int, ...] | None = None,
    strict_b_consistency: bool = False,
    workers: int = 1,
    known_results: dict[int, RepResult] | None = None,
    on_result=None,
) -> SearchOutcome:
    """Run the staged extension over every representative; exhaustion is the answer.

    known_results short-circuits representatives already computed (checkpoint
    replay); on_result is called with each freshly computed RepResult in
    rep-index order.
    """
    anchor_order = tuple(stage_plan or DEFAULT_ANCHOR_ORDER)
    if len(set(anchor_order)) != len(anchor_order) or len(anchor_order) < 2:
        raise ValueError("stage plan must list distinct anchors, at least two")
    for rep in representatives:
        if rep.anchor is not None and rep.anchor != anchor_order[0]:
            raise ValueError("representatives must be anchored at the first stage anchor")

    known = dict(known_results or {})
    for i, res in known.items():
        if not 0 <= i < len(representatives):
            raise ValueError(f"known result for nonexistent representative {i}")
        if len(res.counts) != len(anchor_order) - 1:
            raise ValueError(f"known result for representative {i} has wrong stage count")
    pending = [
        (i, tuple(six_set_mask(m) for m in rep.members))
        for i, rep in enumerate(representatives)
        if i not in known
    ]

    fresh: list[RepResult] = []
    if workers <= 1 or len(pending) <= 1:
        tables = _PipelineTables(anchor_order)
        for rep_index, masks in pending:
            result = RepResult(rep_index, _search_rep(tables, masks, strict_b_consistency))
            fresh.append(result)
            if on_result:
                on_result(result)
    else:
        with multiprocessing.Pool(
            workers, initializer=_init_worker, initargs=(anchor_order, strict_b_consistency)
        ) as pool:
            for result in pool.imap(_worker_job, pending, chunksize=8):
                fresh.append(result)
                if on_result:
                    on_result(result)

    merged = {r.rep_index: r for r in fresh}
    merged.update(known)
    per_rep = tuple(merged[i] for i in range(len(representatives)))
    return SearchOutcome(
        anchor_order=anchor_order,
        strict_b_consistency=strict_b_consistency,
        per_rep=per_rep,
    )


def full_search(
    workers: int = 1,
    strict_b_consistency: bool = False,
    anchor_order: tuple[int, ...] | None = None,
    known_results: dict[int, RepResult] | None = None,
    on_result=None,
) -> SearchReport:
    """Six-sets -> K6 bundles -> orbit reduction -> staged extension search."""
    s = build_canonical_structure()
    anchors = tuple(anchor_order or DEFAULT_ANCHOR_ORDER)
    first = generate_six_sets(anchors[0], s)
    bundles = enumerate_k6(first, anchor=anchors[0])
    orbits = orbit_partition(bundles, group_G1(s))
    outcome = run_extension_search(
        [o.representative for o in orbits],
        stage_plan=anchors,
        strict_b_consistency=strict_b_consistency,
        workers=workers,
        known_results=known_results,
        on_result=on_result,
    )
    return SearchReport(
        six_set_count=len(first),
        k6_count=len(bundles),
        orbit_count=len(orbits),
        orbit_sizes=tuple(o.size for o in orbits),
        outcome=outcome,
    )
