"""Brute-force ground truth: exhaustive enumeration and seeded sampling.

Every relation assignment over the C(n,2) vertex pairs is encoded as a
base-3 counter digit string (0 = tie, 1 = first-listed vertex wins,
2 = second wins; pairs ordered lexicographically, most significant digit
first), so counter order is enumeration order and visit counts are exact.
Tournaments use the same scheme in base 2 (0 = first wins).

Certify mode never prunes. The optional fast mode skips whole digit-prefix
blocks whose partial dominant-vertex count already caps the achievable
inconsistent triads; it returns the same maximum but not necessarily the
first witness.

Sampling uses numpy's PCG64 generator; reports record the seed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from multiprocessing import Pool
from typing import Sequence

import numpy as np

from .bounds import c_bound, d_bound, e_bound, f_bound, h_bound
from .core import GtGraph, TriadCensus, _census_batch_counts
from .errors import BudgetExceeded, MOutOfRange, ValidationError

__all__ = [
    "EnumerationReport",
    "PerMRow",
    "PerMReport",
    "enumerate_max",
    "per_m_minima",
    "random_gt_graph",
    "check_bound_soundness",
    "worker_count",
]

# Exhaustive budgets (graph counts): beyond these an explicit flag is
# required, and past the flagged sizes the space is out of desk scale.
TOURNAMENT_FREE_N = 6
TOURNAMENT_FLAG_N = 7
GT_FREE_N = 5
GT_FLAG_N = 6

_CHUNK = 1 << 15
_PARALLEL_THRESHOLD = 1 << 21


def worker_count(requested: int | None = None) -> int:
    """Resolve the worker count; the PCT_THREADS env var caps it."""
    count = requested or os.cpu_count() or 1
    cap = os.environ.get("PCT_THREADS")
    if cap:
        count = min(count, max(1, int(cap)))
    return max(1, count)


def _family_name(family: str) -> str:
    if family in ("t", "tournament"):
        return "tournament"
    if family in ("gt", "gt-graph"):
        return "gt-graph"
    raise ValidationError(f"unknown family {family!r}; use 'tournament' or 'gt-graph'")


def _space_size(n: int, family: str) -> int:
    pairs = comb(n, 2)
    return (2 if family == "tournament" else 3) ** pairs


def _check_budget(n: int, family: str, allow_big: bool) -> None:
    free = TOURNAMENT_FREE_N if family == "tournament" else GT_FREE_N
    flagged = TOURNAMENT_FLAG_N if family == "tournament" else GT_FLAG_N
    if n <= free:
        return
    if n <= flagged and allow_big:
        return
    hint = "pass allow_big=True" if n <= flagged else "the space exceeds desk scale"
    raise BudgetExceeded(
        f"exhaustive {family} enumeration at n={n} visits {_space_size(n, family)} graphs; {hint}"
    )


def _digits_to_relations(counters: np.ndarray, pairs: int, base: int) -> np.ndarray:
    """Decode counters to (B, P) relation vectors, big-endian digit order."""
    shifts = np.arange(pairs - 1, -1, -1, dtype=np.int64)
    digits = (counters[:, None] // base**shifts) % base
    if base == 2:
        return (1 - 2 * digits).astype(np.int8)
    rel = np.zeros(digits.shape, dtype=np.int8)
    rel[digits == 1] = 1
    rel[digits == 2] = -1
    return rel


def _rel_vector_to_graph(vec: np.ndarray, n: int) -> GtGraph:
    rel = np.zeros((n, n), dtype=np.int8)
    i, j = np.triu_indices(n, 1)
    rel[i, j] = vec
    rel[j, i] = -vec
    return GtGraph._from_rel(rel)


@dataclass
class _PerMAccumulator:
    """Running per-m minima/maxima over a stream of censused batches."""

    n: int

    def __post_init__(self) -> None:
        size = comb(self.n, 2) + 1
        self.graphs = np.zeros(size, dtype=np.int64)
        self.min_ct2a_ct3 = np.full(size, np.iinfo(np.int64).max)
        self.min_t0_weighted = np.full(size, np.iinfo(np.int64).max)
        self.min_t23 = np.full(size, np.iinfo(np.int64).max)
        self.min_t0 = np.full(size, np.iinfo(np.int64).max)
        self.max_inconsistent = np.full(size, -1, dtype=np.int64)

    def update(self, m_values: np.ndarray, counts: dict[str, np.ndarray]) -> None:
        t0 = counts["ct0"]
        t1 = counts["it1"]
        t23 = counts["it2"] + counts["ct2a"] + counts["ct2b"] + counts["ct3"] + counts["it3"]
        ct2a_ct3 = counts["ct2a"] + counts["ct3"]
        incons = counts["it1"] + counts["it2"] + counts["it3"]
        np.add.at(self.graphs, m_values, 1)
        np.minimum.at(self.min_ct2a_ct3, m_values, ct2a_ct3)
        np.minimum.at(self.min_t0_weighted, m_values, 3 * t0 + t1)
        np.minimum.at(self.min_t23, m_values, t23)
        np.minimum.at(self.min_t0, m_values, t0)
        np.maximum.at(self.max_inconsistent, m_values, incons)

    def merge(self, other: "_PerMAccumulator") -> None:
        self.graphs += other.graphs
        np.minimum(self.min_ct2a_ct3, other.min_ct2a_ct3, out=self.min_ct2a_ct3)
        np.minimum(self.min_t0_weighted, other.min_t0_weighted, out=self.min_t0_weighted)
        np.minimum(self.min_t23, other.min_t23, out=self.min_t23)
        np.minimum(self.min_t0, other.min_t0, out=self.min_t0)
        np.maximum(self.max_inconsistent, other.max_inconsistent, out=self.max_inconsistent)

    def rows(self, certified: bool) -> list["PerMRow"]:
        out = []
        for m in range(len(self.graphs)):
            if self.graphs[m] == 0:
                continue
            out.append(
                PerMRow(
                    m=m,
                    graphs_seen=int(self.graphs[m]),
                    min_ct2a_ct3=int(self.min_ct2a_ct3[m]),
                    min_t0_weighted=int(self.min_t0_weighted[m]),
                    min_t23=int(self.min_t23[m]),
                    min_t0=int(self.min_t0[m]),
                    max_inconsistent=int(self.max_inconsistent[m]),
                    certified=certified,
                )
            )
        return out


@dataclass(frozen=True)
class PerMRow:
    """Observed extrema over graphs with a fixed directed-edge count m.

    Exhaustive rows are certified true minima; sampled rows are upper bounds
    on the true minima (and lower bounds on the true maxima).
    """

    m: int
    graphs_seen: int
    min_ct2a_ct3: int
    min_t0_weighted: int  # 3*|T0| + |T1|
    min_t23: int
    min_t0: int
    max_inconsistent: int
    certified: bool


@dataclass(frozen=True)
class PerMReport:
    n: int
    mode: str  # "exhaustive" | "sampled"
    rows: tuple[PerMRow, ...]
    samples_per_m: int | None = None
    seed: int | None = None


@dataclass(frozen=True)
class EnumerationReport:
    """Result of one exhaustive family scan."""

    n: int
    family: str
    graphs_visited: int
    max_inconsistent_found: int
    witness: GtGraph
    per_m: tuple[PerMRow, ...] | None = None
    seed: int | None = None

    def to_json(self) -> dict:
        from .fileio import graph_to_edge_lines

        doc: dict = {
            "n": self.n,
            "family": self.family,
            "visited": self.graphs_visited,
            "max": self.max_inconsistent_found,
            "witness_edges": graph_to_edge_lines(self.witness),
        }
        if self.per_m is not None:
            doc["per_m"] = [
                {
                    "m": r.m,
                    "graphs": r.graphs_seen,
                    "min_ct2a_ct3": r.min_ct2a_ct3,
                    "min_3t0_plus_t1": r.min_t0_weighted,
                    "min_t23": r.min_t23,
                    "min_t0": r.min_t0,
                    "max_inconsistent": r.max_inconsistent,
                    "certified": r.certified,
                }
                for r in self.per_m
            ]
        if self.seed is not None:
            doc["seed"] = self.seed
        return doc


def _scan_range(args) -> tuple[int, int, int, _PerMAccumulator | None]:
    """Scan counters [start, stop); returns (visited, best, witness, per_m)."""
    n, family, start, stop, collect_per_m, prune = args
    pairs = comb(n, 2)
    base = 2 if family == "tournament" else 3
    acc = _PerMAccumulator(n) if collect_per_m else None
    best = -1
    witness = -1
    visited = 0
    block = _CHUNK
    for lo in range(start, stop, block):
        hi = min(lo + block, stop)
        counters = np.arange(lo, hi, dtype=np.int64)
        rel = _digits_to_relations(counters, pairs, base)
        if prune and best >= 0 and _block_bound(rel[0], n, pairs, lo, hi, base) <= best:
            # Whole aligned block cannot beat the current best; the bound
            # only uses digits shared by every counter in the block.
            visited += hi - lo
            continue
        counts = _census_batch_counts(rel, n)
        incons = counts["it1"] + counts["it2"] + counts["it3"]
        local_best = int(incons.max()) if len(incons) else -1
        if local_best > best:
            best = local_best
            witness = int(counters[int(np.argmax(incons))])
        if acc is not None:
            m_values = (rel != 0).sum(axis=1, dtype=np.int64)
            acc.update(m_values, counts)
        visited += hi - lo
    return visited, best, witness, acc


def _block_bound(first_rel: np.ndarray, n: int, pairs: int, lo: int, hi: int, base: int) -> int:
    """Upper bound on inconsistent triads over an aligned counter block.

    Digits below the varying suffix are shared; wins already forced on the
    shared prefix give each vertex a floor on its victory count, and the
    dominant-vertex identity caps inconsistency at C(n,3) minus the forced
    consistent triads.
    """
    span = hi - lo
    fixed = pairs
    width = span - 1
    while width > 0:
        fixed -= 1
        width //= base
    if lo % base ** (pairs - fixed) != 0:
        return comb(n, 3)  # unaligned block: no shared prefix guarantee
    i, j = np.triu_indices(n, 1)
    deg = np.zeros(n, dtype=np.int64)
    prefix = first_rel[:fixed]
    winners_i = i[:fixed][prefix == 1]
    winners_j = j[:fixed][prefix == -1]
    np.add.at(deg, winners_i, 1)
    np.add.at(deg, winners_j, 1)
    forced = int((deg * (deg - 1) // 2).sum())
    return comb(n, 3) - forced


def enumerate_max(
    n: int,
    family: str = "gt-graph",
    *,
    allow_big: bool = False,
    collect_per_m: bool = False,
    prune: bool = False,
    workers: int | None = None,
) -> EnumerationReport:
    """Exhaustively find the most inconsistent graph of the family.

    The witness is the first maximal graph in enumeration order (with
    prune=True only the maximum count is guaranteed). Raises BudgetExceeded
    for spaces past the default budget unless allow_big covers them.
    """
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    family = _family_name(family)
    _check_budget(n, family, allow_big)
    total = _space_size(n, family)
    nworkers = worker_count(workers)
    prune = prune and not collect_per_m  # per-m stats need every graph censused
    if nworkers > 1 and total >= _PARALLEL_THRESHOLD:
        step = -(-total // nworkers)
        step = max(1, -(-step // _CHUNK)) * _CHUNK  # chunk-aligned for pruning
        ranges = [(s, min(s + step, total)) for s in range(0, total, step)]
    else:
        ranges = [(0, total)]
    tasks = [(n, family, s, e, collect_per_m, prune) for s, e in ranges]
    if len(tasks) == 1:
        results = [_scan_range(tasks[0])]
    else:
        with Pool(processes=len(tasks)) as pool:
            results = pool.map(_scan_range, tasks)

    visited = sum(r[0] for r in results)
    best = max(r[1] for r in results)
    witness_counter = min(r[2] for r in results if r[1] == best)
    acc = None
    for r in results:
        if r[3] is not None:
            if acc is None:
                acc = r[3]
            else:
                acc.merge(r[3])

    pairs = comb(n, 2)
    base = 2 if family == "tournament" else 3
    vec = _digits_to_relations(np.array([witness_counter], dtype=np.int64), pairs, base)[0]
    witness = _rel_vector_to_graph(vec, n)
    return EnumerationReport(
        n=n,
        family=family,
        graphs_visited=visited,
        max_inconsistent_found=best,
        witness=witness,
        per_m=tuple(acc.rows(certified=True)) if acc is not None else None,
    )


def _sample_pair_relations(
    n: int, m: int, count: int, rng: np.random.Generator
) -> np.ndarray:
    """(count, P) relation vectors with exactly m directed pairs each.

    The m-subset of pairs is uniform; each directed pair takes either
    orientation with probability 1/2.
    """
    pairs = comb(n, 2)
    rel = np.zeros((count, pairs), dtype=np.int8)
    if m == 0:
        return rel
    signs = (rng.integers(0, 2, size=(count, m), dtype=np.int8) * 2 - 1).astype(np.int8)
    if m == pairs:
        return signs
    u = rng.random((count, pairs))
    idx = np.argpartition(u, m, axis=1)[:, :m]
    np.put_along_axis(rel, idx, signs, axis=1)
    return rel


def random_gt_graph(n: int, m: int, seed: int) -> GtGraph:
    """Seeded random gt-graph with exactly m directed pairs (PCG64 stream)."""
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    if not 0 <= m <= comb(n, 2):
        raise MOutOfRange(n, m)
    rng = np.random.default_rng(seed)
    vec = _sample_pair_relations(n, m, 1, rng)[0]
    return _rel_vector_to_graph(vec, n)


SAMPLED_PER_M_MAX_N = 12


def per_m_minima(
    n: int,
    *,
    samples: int = 100_000,
    seed: int = 0,
    allow_big: bool = False,
) -> PerMReport:
    """Observed per-m extrema of the bounded quantities over gt-graphs.

    n <= 5 is exhaustive (certified); 6 <= n <= 12 draws `samples` seeded
    graphs for every m. Larger n raises BudgetExceeded.
    """
    if n < 3:
        raise ValidationError(f"need n >= 3, got {n}")
    if n <= GT_FREE_N or (n == GT_FLAG_N and allow_big):
        report = enumerate_max(n, "gt-graph", allow_big=allow_big, collect_per_m=True)
        return PerMReport(n=n, mode="exhaustive", rows=tuple(report.per_m or ()))
    if n > SAMPLED_PER_M_MAX_N:
        raise BudgetExceeded(
            f"per-m sampling is budgeted to n <= {SAMPLED_PER_M_MAX_N}, got n={n}"
        )
    acc = _PerMAccumulator(n)
    chunk = 8192
    for m in range(comb(n, 2) + 1):
        rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(n, m)))
        remaining = samples
        while remaining > 0:
            batch = min(chunk, remaining)
            rel = _sample_pair_relations(n, m, batch, rng)
            counts = _census_batch_counts(rel, n)
            acc.update(np.full(batch, m, dtype=np.int64), counts)
            remaining -= batch
    return PerMReport(
        n=n, mode="sampled", rows=tuple(acc.rows(certified=False)), samples_per_m=samples, seed=seed
    )


def check_bound_soundness(report: PerMReport) -> list[str]:
    """Compare observed per-m extrema against the bounding family.

    Returns one message per violated inequality (empty list = all sound).
    Works for exhaustive and sampled reports alike: a sampled observation
    below a lower bound or above the upper bound is a genuine violation.
    """
    n = report.n
    violations = []
    for row in report.rows:
        m = row.m
        checks = [
            ("CT2a+CT3 lower bound", row.min_ct2a_ct3, c_bound(n, m), "lower"),
            ("3*T0+T1 lower bound", row.min_t0_weighted, d_bound(n, m), "lower"),
            ("T23 lower bound", row.min_t23, e_bound(n, m), "lower"),
            ("T0 lower bound", row.min_t0, f_bound(n, m), "lower"),
            ("inconsistent upper bound", row.max_inconsistent, h_bound(n, m), "upper"),
        ]
        for name, observed, bound, sense in checks:
            ok = observed >= bound if sense == "lower" else observed <= bound
            if not ok:
                violations.append(
                    f"n={n} m={m}: {name} violated (observed {observed}, bound {bound})"
                )
    return violations


def census_from_pair_vector(vec: Sequence[int], n: int) -> TriadCensus:
    """Census of a single pair-relation vector (oracle-side recomputation)."""
    arr = np.asarray(vec, dtype=np.int8)[None, :]
    counts = _census_batch_counts(arr, n)
    return TriadCensus(**{k: int(v[0]) for k, v in counts.items()})
