"""Maximally inconsistent graph constructions and the triad-cover solver.

gen_max_tournament builds the circulant-style tournament whose in-degrees
are as even as possible; rebalance_to_max converts an arbitrary tournament
into one by edge flips; gen_max_dt_graph glues two maximal tournaments with
all cross pairs tied. min_triad_cover answers the (special) set-cover
question: the fewest directed edges touching every triad.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import ceil

import numpy as np

from .core import GtGraph
from .errors import BudgetExceeded, NotATournament, ValidationError

__all__ = [
    "DtGraph",
    "gen_max_tournament",
    "rebalance_to_max",
    "gen_max_dt_graph",
    "CoverInstance",
    "build_cover_instance",
    "min_triad_cover",
]

EXACT_COVER_MAX_N = 8


def _fill_circulant(rel: np.ndarray, offset: int, size: int) -> None:
    """Write the maximal-tournament pattern for `size` vertices at `offset`.

    Vertex a beats b iff 0 < (b - a) mod size <= floor((size-1)/2); for even
    sizes each antipodal pair (a, a + size/2) goes to the lower index. This
    reproduces the reference matrices for sizes 6 and 7 byte for byte.
    """
    if size < 2:
        return
    half = (size - 1) // 2
    idx = np.arange(size)
    diff = (idx[None, :] - idx[:, None]) % size
    wins = (diff > 0) & (diff <= half)
    if size % 2 == 0:
        wins |= (diff == size // 2) & (idx[:, None] < idx[None, :])
    block = wins.astype(np.int8) - wins.T.astype(np.int8)
    rel[offset : offset + size, offset : offset + size] = block


def gen_max_tournament(n: int) -> GtGraph:
    """Tournament with the maximum number of inconsistent triads.

    In-degrees are all r for n = 2r+1, and r copies each of r and r-1 for
    n = 2r; the inconsistent count equals max_inconsistent_no_ties(n).
    """
    if n < 1:
        raise ValidationError(f"vertex count must be >= 1, got {n}")
    rel = np.zeros((n, n), dtype=np.int8)
    _fill_circulant(rel, 0, n)
    return GtGraph._from_rel(rel)


def _degree_targets(n: int) -> tuple[int, int]:
    """(low, high) admissible in-degrees of a maximal tournament."""
    r = (n - 1) // 2 if n % 2 else n // 2
    return (r, r) if n % 2 else (r - 1, r)


def rebalance_to_max(t: GtGraph) -> GtGraph:
    """Flip edges of a tournament until its in-degrees satisfy the maximal
    profile; the inconsistent count never decreases along the way and ends
    at max_inconsistent_no_ties(n).
    """
    rel, _ = _rebalance(t)
    return GtGraph._from_rel(rel)


def _rebalance(t: GtGraph) -> tuple[np.ndarray, list[tuple[int, int]]]:
    if not t.is_tournament:
        raise NotATournament(min(t.undirected))
    n = t.n
    rel = t.relation_matrix.copy()
    lo, hi = _degree_targets(n)
    deg = (rel == 1).sum(axis=1)
    flips: list[tuple[int, int]] = []

    def do_flip(a: int, b: int) -> None:
        # a currently beats b; hand the win to b
        rel[a, b], rel[b, a] = -1, 1
        deg[a] -= 1
        deg[b] += 1
        flips.append((a, b))

    while int(deg.max(initial=0)) > hi or (n > 1 and int(deg.min()) < lo):
        order = sorted(range(n), key=lambda v: (-int(deg[v]), v))
        chosen = None
        for a in order:
            victims = np.nonzero(rel[a] == 1)[0]
            eligible = victims[deg[victims] <= deg[a] - 2]
            if len(eligible):
                keys = sorted(((int(deg[b]), int(b)) for b in eligible))
                chosen = (a, keys[0][1])
                break
        if chosen is not None:
            do_flip(*chosen)
            continue
        # Tight case: max degree = min degree + 2, every max vertex loses to
        # every min vertex. A middle vertex w with u beats w beats v always
        # exists; two flips move one unit of in-degree from u to v.
        u = order[0]
        v = order[-1]
        mids = np.nonzero((rel[u] == 1) & (rel[v] == -1))[0]
        assert len(mids) > 0, "balanced-degree invariant violated"
        w = int(mids[0])
        do_flip(u, w)
        do_flip(w, v)
    return rel, flips


@dataclass(frozen=True)
class DtGraph:
    """A gt-graph split into two internally-directed parts with all cross
    pairs tied; part sizes floor(n/2) and ceil(n/2)."""

    graph: GtGraph
    part1: tuple[int, ...]
    part2: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n


def gen_max_dt_graph(n: int) -> DtGraph:
    """Most inconsistent gt-graph: two maximal tournaments joined by ties.

    Every cross-part triad is inconsistent, no triad is uncovered, and the
    inconsistent count equals max_inconsistent_with_ties(n).
    """
    if n < 2:
        raise ValidationError(f"need n >= 2, got {n}")
    lo = n // 2
    rel = np.zeros((n, n), dtype=np.int8)
    _fill_circulant(rel, 0, lo)
    _fill_circulant(rel, lo, n - lo)
    return DtGraph(
        graph=GtGraph._from_rel(rel),
        part1=tuple(range(lo)),
        part2=tuple(range(lo, n)),
    )


# ---------------------------------------------------------------------------
# Triad cover: pick the fewest vertex pairs (candidate directed edges) such
# that every triad contains at least one picked pair.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverInstance:
    """Set-cover view: each candidate pair covers the n-2 triads through it."""

    n: int
    universe: tuple[tuple[int, int, int], ...]
    sets: dict[tuple[int, int], tuple[tuple[int, int, int], ...]]


def build_cover_instance(n: int) -> CoverInstance:
    if n < 3:
        raise ValidationError(f"need n >= 3, got {n}")
    universe = tuple(itertools.combinations(range(n), 3))
    sets = {
        (i, j): tuple(t for t in universe if i in t and j in t)
        for i, j in itertools.combinations(range(n), 2)
    }
    return CoverInstance(n=n, universe=universe, sets=sets)


def _cover_masks(n: int) -> tuple[list[tuple[int, int]], list[int], int]:
    triads = list(itertools.combinations(range(n), 3))
    tidx = {t: b for b, t in enumerate(triads)}
    pairs = list(itertools.combinations(range(n), 2))
    masks = []
    for i, j in pairs:
        mask = 0
        for k in range(n):
            if k != i and k != j:
                mask |= 1 << tidx[tuple(sorted((i, j, k)))]
        masks.append(mask)
    return pairs, masks, (1 << len(triads)) - 1


def _greedy_cover(pairs, masks, full) -> list[int]:
    chosen: list[int] = []
    covered = 0
    while covered != full:
        best, best_gain = -1, -1
        for p, mask in enumerate(masks):
            gain = bin(mask & ~covered).count("1")
            if gain > best_gain:
                best, best_gain = p, gain
        chosen.append(best)
        covered |= masks[best]
    return chosen


def min_triad_cover(
    n: int, mode: str = "exact", *, force: bool = False
) -> tuple[tuple[tuple[int, int], ...], int]:
    """Smallest set of pairs covering all triads; returns (pairs, size).

    mode="greedy" returns a feasible cover quickly (no optimality claim);
    mode="exact" proves minimality by branch-and-bound search. The exact
    search is budgeted to n <= 8 unless force=True. The minimum always
    equals dt_edge_count(n); the exact mode establishes that by search
    rather than assuming it.
    """
    if n < 3:
        raise ValidationError(f"need n >= 3, got {n}")
    if mode not in ("greedy", "exact"):
        raise ValidationError(f"mode must be 'greedy' or 'exact', got {mode!r}")
    pairs, masks, full = _cover_masks(n)
    greedy = _greedy_cover(pairs, masks, full)
    if mode == "greedy":
        sel = tuple(sorted(pairs[p] for p in greedy))
        return sel, len(sel)
    if n > EXACT_COVER_MAX_N and not force:
        raise BudgetExceeded(
            f"exact cover search is budgeted to n <= {EXACT_COVER_MAX_N}; "
            f"pass force=True to run n={n} anyway"
        )
    best = _branch_and_bound(n, pairs, masks, full, greedy)
    sel = tuple(sorted(pairs[p] for p in best))
    return sel, len(sel)


def _branch_and_bound(n, pairs, masks, full, incumbent: list[int]) -> list[int]:
    """Exact minimum cover via DFS on uncovered triads.

    Branching on a single uncovered triad (three candidate pairs, with
    already-rejected pairs banned down-branch) enumerates every inclusion-
    minimal cover once. Pruning uses ceil(uncovered / best-residual-gain).
    By vertex symmetry the first triad may be covered by the pair (0, 1)
    without loss of generality, so the root explores one branch.
    """
    pidx = {p: i for i, p in enumerate(pairs)}
    # triad bit -> the 3 pair indices covering it
    pair_options = [
        (pidx[(i, j)], pidx[(i, k)], pidx[(j, k)])
        for i, j, k in itertools.combinations(range(n), 3)
    ]

    best = list(incumbent)

    def dfs(chosen: list[int], covered: int, banned: int) -> None:
        nonlocal best
        if covered == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + 1 >= len(best):
            return
        uncovered = bin(full & ~covered).count("1")
        max_gain = 0
        for p, mask in enumerate(masks):
            if banned >> p & 1:
                continue
            gain = bin(mask & ~covered).count("1")
            if gain > max_gain:
                max_gain = gain
        if max_gain == 0:
            return
        if len(chosen) + ceil(uncovered / max_gain) >= len(best):
            return
        remaining = ~covered & full
        b = (remaining & -remaining).bit_length() - 1
        options = [p for p in pair_options[b] if not banned >> p & 1]
        new_banned = banned
        for p in options:
            dfs(chosen + [p], covered | masks[p], new_banned)
            new_banned |= 1 << p

    root = pidx[(0, 1)]
    dfs([root], masks[root], 0)
    return best
