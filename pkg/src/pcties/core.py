"""Ordinal pairwise-comparison matrices, generalized tournament graphs, and triads.

Orientation convention used throughout the package: a directed edge (u, v)
means v DEFEATS u: the arrowhead sits at the winner. Equivalently, for the
matrix M, entry m[i][j] = 1 means alternative i beats alternative j, and the
corresponding graph edge is (j, i). Most tournament literature points arrows
the other way; every function below sticks to the arrowhead-at-winner rule,
so deg_in(v) counts the victories of v.

Vertices are 0-based dense integers. 1-based labels appear only at I/O
surfaces (CLI, service).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DiagonalNonZero,
    DuplicateVertex,
    EntryOutOfRange,
    NonSquare,
    NotSkewSymmetric,
    ValidationError,
    VertexOutOfRange,
)

__all__ = [
    "OrdinalPcMatrix",
    "GtGraph",
    "DegreeTriple",
    "TriadClass",
    "TriadCensus",
    "validate_matrix",
    "matrix_to_graph",
    "graph_to_matrix",
    "degrees",
    "classify_triad",
    "triad_census",
    "list_inconsistent_triads",
]

# Above this size triad_census switches from the plain Python loop to the
# vectorized path; both are cross-checked in the test suite.
_VECTORIZE_THRESHOLD = 40


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class OrdinalPcMatrix:
    """n x n skew-symmetric judgment matrix over {-1, 0, +1}.

    entries[i][j] = 1 when i beats j, -1 when j beats i, 0 for a tie.
    Immutable after construction; build one via validate_matrix().
    """

    __slots__ = ("_rel",)

    def __init__(self, entries: np.ndarray, *, _trusted: bool = False) -> None:
        if not _trusted:
            entries = _validated_entries(entries)
        self._rel = _freeze(entries)

    @property
    def n(self) -> int:
        return self._rel.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only n x n int8 array of judgments."""
        return self._rel

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return int(self._rel[ij])

    def to_lists(self) -> list[list[int]]:
        return self._rel.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrdinalPcMatrix):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._rel, other._rel))

    def __hash__(self) -> int:
        return hash((self.n, self._rel.tobytes()))

    def __repr__(self) -> str:
        return f"OrdinalPcMatrix(n={self.n})"


class GtGraph:
    """Generalized tournament graph: every vertex pair is directed or tied.

    `directed` holds ordered pairs (loser, winner); see the module note on
    orientation. `undirected` holds sorted tied pairs. Construction
    checks totality: each unordered pair must appear in exactly one of the
    two sets.
    """

    __slots__ = ("_rel", "_directed", "_undirected")

    def __init__(
        self,
        n: int,
        directed: Iterable[tuple[int, int]] = (),
        undirected: Iterable[tuple[int, int]] = (),
    ) -> None:
        if n < 1:
            raise ValidationError(f"vertex count must be >= 1, got {n}")
        rel = np.zeros((n, n), dtype=np.int8)
        seen = np.zeros((n, n), dtype=bool)

        def check(i: int, j: int) -> None:
            if not (isinstance(i, (int, np.integer)) and isinstance(j, (int, np.integer))):
                raise VertexOutOfRange((i, j), n)
            if not (0 <= i < n and 0 <= j < n):
                raise VertexOutOfRange((i, j), n)
            if i == j:
                raise ValidationError(f"self-loop on vertex {i}")
            if seen[i, j]:
                raise ValidationError(f"pair ({i},{j}) specified twice")
            seen[i, j] = seen[j, i] = True

        for loser, winner in directed:
            check(loser, winner)
            rel[winner, loser] = 1
            rel[loser, winner] = -1
        for i, j in undirected:
            check(i, j)
        iu = np.triu_indices(n, 1)
        if n > 1 and not seen[iu].all():
            i, j = np.argwhere(~np.triu(seen, 1) & np.triu(np.ones((n, n), bool), 1))[0]
            raise ValidationError(f"pair ({i},{j}) has no relation; gt-graphs are total")
        self._rel = _freeze(rel)
        self._directed = None
        self._undirected = None

    @classmethod
    def _from_rel(cls, rel: np.ndarray) -> "GtGraph":
        """Wrap an already-valid skew relation matrix (internal fast path).

        Copies, so callers may keep mutating their buffer.
        """
        g = object.__new__(cls)
        g._rel = _freeze(np.array(rel, dtype=np.int8, order="C"))
        g._directed = None
        g._undirected = None
        return g

    @property
    def n(self) -> int:
        return self._rel.shape[0]

    @property
    def relation_matrix(self) -> np.ndarray:
        """Read-only int8 matrix; [i, j] == 1 iff i beats j."""
        return self._rel

    def relation(self, i: int, j: int) -> int:
        """+1 if i beats j, -1 if j beats i, 0 on a tie."""
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise VertexOutOfRange((i, j), self.n)
        return int(self._rel[i, j])

    @property
    def directed(self) -> frozenset[tuple[int, int]]:
        """Ordered pairs (loser, winner); computed lazily."""
        if self._directed is None:
            winners, losers = np.nonzero(self._rel == 1)
            self._directed = frozenset(zip(losers.tolist(), winners.tolist()))
        return self._directed

    @property
    def undirected(self) -> frozenset[tuple[int, int]]:
        """Tied pairs as sorted tuples (i, j) with i < j; computed lazily."""
        if self._undirected is None:
            i, j = np.triu_indices(self.n, 1)
            mask = self._rel[i, j] == 0
            self._undirected = frozenset(zip(i[mask].tolist(), j[mask].tolist()))
        return self._undirected

    @property
    def is_tournament(self) -> bool:
        """True when no pair is tied (Def. of a plain tournament)."""
        i, j = np.triu_indices(self.n, 1)
        return bool((self._rel[i, j] != 0).all())

    @property
    def directed_edge_count(self) -> int:
        return int((self._rel == 1).sum())

    def in_degrees(self) -> np.ndarray:
        """Vector of victories per vertex (incoming arrowheads)."""
        return (self._rel == 1).sum(axis=1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GtGraph):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._rel, other._rel))

    def __hash__(self) -> int:
        return hash((self.n, self._rel.tobytes()))

    def __repr__(self) -> str:
        return f"GtGraph(n={self.n}, directed={self.directed_edge_count})"


@dataclass(frozen=True)
class DegreeTriple:
    """Victories, defeats, and ties of one vertex; sums to n - 1."""

    deg_in: int
    deg_out: int
    deg_un: int

    @property
    def deg(self) -> int:
        return self.deg_in + self.deg_out + self.deg_un


class TriadClass(Enum):
    """The seven triad shapes over {win, loss, tie} relations.

    The index digit counts directed edges inside the triad; CT/IT marks
    consistent vs inconsistent.
    """

    CT0 = "CT0"
    IT1 = "IT1"
    IT2 = "IT2"
    CT2A = "CT2a"
    CT2B = "CT2b"
    CT3 = "CT3"
    IT3 = "IT3"

    @property
    def is_inconsistent(self) -> bool:
        return self in (TriadClass.IT1, TriadClass.IT2, TriadClass.IT3)

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class TriadCensus:
    """Counts of all C(n,3) triads by class."""

    ct0: int = 0
    it1: int = 0
    it2: int = 0
    ct2a: int = 0
    ct2b: int = 0
    ct3: int = 0
    it3: int = 0

    @property
    def t0(self) -> int:
        """Triads covered by no directed edge."""
        return self.ct0

    @property
    def t1(self) -> int:
        """Triads covered by exactly one directed edge."""
        return self.it1

    @property
    def t2(self) -> int:
        return self.it2 + self.ct2a + self.ct2b

    @property
    def t3(self) -> int:
        return self.ct3 + self.it3

    @property
    def t23(self) -> int:
        """Triads covered by two or three directed edges."""
        return self.t2 + self.t3

    @property
    def total(self) -> int:
        return self.ct0 + self.it1 + self.it2 + self.ct2a + self.ct2b + self.ct3 + self.it3

    @property
    def inconsistent_total(self) -> int:
        return self.it1 + self.it2 + self.it3

    @property
    def consistent_total(self) -> int:
        return self.total - self.inconsistent_total

    def count(self, cls: TriadClass) -> int:
        return getattr(self, cls.name.lower())

    def as_dict(self) -> dict[str, int]:
        return {c.value: self.count(c) for c in TriadClass}


def _validated_entries(raw) -> np.ndarray:
    rows = raw.tolist() if isinstance(raw, np.ndarray) else list(raw)
    n = len(rows)
    if n == 0:
        raise NonSquare(0, 0)
    for i, row in enumerate(rows):
        width = len(row) if hasattr(row, "__len__") else -1
        if width != n:
            raise NonSquare(n, width)
    out = np.zeros((n, n), dtype=np.int8)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise EntryOutOfRange(i, j, v)
            if v not in (-1, 0, 1):
                raise EntryOutOfRange(i, j, int(v))
            out[i, j] = v
    for i in range(n):
        if out[i, i] != 0:
            raise DiagonalNonZero(i, int(out[i, i]))
    for i in range(n):
        for j in range(i + 1, n):
            if out[i, j] + out[j, i] != 0:
                raise NotSkewSymmetric(i, j)
    return out


def validate_matrix(raw) -> OrdinalPcMatrix:
    """Check a square array against the judgment-matrix invariants.

    Raises NonSquare, EntryOutOfRange, DiagonalNonZero or NotSkewSymmetric,
    each naming the first offending index (row-major scan). The input is
    never mutated.
    """
    return OrdinalPcMatrix(_validated_entries(raw), _trusted=True)


def matrix_to_graph(m: OrdinalPcMatrix) -> GtGraph:
    """Graph view of a matrix: edge (j, i) present iff m[i][j] == 1."""
    return GtGraph._from_rel(m.entries.copy())


def graph_to_matrix(g: GtGraph) -> OrdinalPcMatrix:
    """Exact inverse of matrix_to_graph."""
    return OrdinalPcMatrix(g.relation_matrix.copy(), _trusted=True)


def degrees(g: GtGraph, v: int) -> DegreeTriple:
    """In/out/undirected degree of one vertex (in = victories)."""
    if not (isinstance(v, (int, np.integer)) and 0 <= v < g.n):
        raise VertexOutOfRange(v, g.n)
    row = g.relation_matrix[v]
    deg_in = int((row == 1).sum())
    deg_out = int((row == -1).sum())
    return DegreeTriple(deg_in, deg_out, g.n - 1 - deg_in - deg_out)


def _classify_rel(rij: int, rik: int, rjk: int) -> TriadClass:
    """Classify one triad from its three pair relations (i<j<k order)."""
    d = (rij != 0) + (rik != 0) + (rjk != 0)
    if d == 0:
        return TriadClass.CT0
    if d == 1:
        return TriadClass.IT1
    # wins within the triad, per vertex
    wi = (rij == 1) + (rik == 1)
    wj = (rij == -1) + (rjk == 1)
    wk = (rik == -1) + (rjk == -1)
    if d == 3:
        # cyclic iff every vertex wins exactly once
        return TriadClass.CT3 if (wi == 2 or wj == 2 or wk == 2) else TriadClass.IT3
    # d == 2: one tie; consistent iff the odd vertex wins or loses both
    if wi == 2 or wj == 2 or wk == 2:
        return TriadClass.CT2A
    li = (rij == -1) + (rik == -1)
    lj = (rij == 1) + (rjk == -1)
    lk = (rik == 1) + (rjk == 1)
    if li == 2 or lj == 2 or lk == 2:
        return TriadClass.CT2B
    return TriadClass.IT2


def classify_triad(g: GtGraph, triple: Sequence[int]) -> TriadClass:
    """Class of the triad on three distinct vertices (order-independent)."""
    a, b, c = triple
    for v in (a, b, c):
        if not (isinstance(v, (int, np.integer)) and 0 <= v < g.n):
            raise VertexOutOfRange(v, g.n)
    if a == b or a == c or b == c:
        raise DuplicateVertex((a, b, c))
    i, j, k = sorted((int(a), int(b), int(c)))
    rel = g.relation_matrix
    return _classify_rel(int(rel[i, j]), int(rel[i, k]), int(rel[j, k]))


# ---------------------------------------------------------------------------
# Vectorized triad machinery. Relations for a graph are flattened to the
# C(n,2) upper-triangle pair vector (pairs ordered (0,1),(0,2),...,(n-2,n-1));
# a batch is a (B, P) int8 array of such vectors. The oracle reuses this
# kernel for exhaustive enumeration and mass sampling.
# ---------------------------------------------------------------------------

_CLASS_ORDER = ("ct0", "it1", "it2", "ct2a", "ct2b", "ct3", "it3")


@lru_cache(maxsize=16)
def _pair_index_matrix(n: int) -> np.ndarray:
    idx = np.full((n, n), -1, dtype=np.int64)
    i, j = np.triu_indices(n, 1)
    idx[i, j] = np.arange(len(i))
    idx[j, i] = idx[i, j]
    return _freeze(idx)


@lru_cache(maxsize=8)
def _triple_pair_indices(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pair-vector positions (ij, ik, jk) for every triple i<j<k."""
    pidx = _pair_index_matrix(n)
    ij_parts, ik_parts, jk_parts = [], [], []
    for k in range(2, n):
        a, b = np.triu_indices(k, 1)
        ij_parts.append(pidx[a, b])
        ik_parts.append(pidx[a, k])
        jk_parts.append(pidx[b, k])
    if not ij_parts:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty
    return (
        _freeze(np.concatenate(ij_parts)),
        _freeze(np.concatenate(ik_parts)),
        _freeze(np.concatenate(jk_parts)),
    )


def _census_batch_counts(rel: np.ndarray, n: int, triple_slice: slice | None = None) -> dict[str, np.ndarray]:
    """Per-class triad counts for a (B, P) batch of pair-relation vectors."""
    pij, pik, pjk = _triple_pair_indices(n)
    if triple_slice is not None:
        pij, pik, pjk = pij[triple_slice], pik[triple_slice], pjk[triple_slice]
    a = rel[:, pij]
    b = rel[:, pik]
    c = rel[:, pjk]
    d = (a != 0).astype(np.int8) + (b != 0) + (c != 0)
    wi = (a == 1).astype(np.int8) + (b == 1)
    wj = (a == -1).astype(np.int8) + (c == 1)
    wk = (b == -1).astype(np.int8) + (c == -1)
    some_w2 = (wi == 2) | (wj == 2) | (wk == 2)
    li = (a == -1).astype(np.int8) + (b == -1)
    lj = (a == 1).astype(np.int8) + (c == -1)
    lk = (b == 1).astype(np.int8) + (c == 1)
    some_l2 = (li == 2) | (lj == 2) | (lk == 2)

    two = d == 2
    three = d == 3
    counts = {
        "ct0": (d == 0).sum(axis=1, dtype=np.int64),
        "it1": (d == 1).sum(axis=1, dtype=np.int64),
        "ct2a": (two & some_w2).sum(axis=1, dtype=np.int64),
        "ct2b": (two & some_l2).sum(axis=1, dtype=np.int64),
        "it2": (two & ~some_w2 & ~some_l2).sum(axis=1, dtype=np.int64),
        "ct3": (three & some_w2).sum(axis=1, dtype=np.int64),
        "it3": (three & ~some_w2).sum(axis=1, dtype=np.int64),
    }
    return counts


def _matrix_to_pair_vector(rel: np.ndarray) -> np.ndarray:
    n = rel.shape[0]
    i, j = np.triu_indices(n, 1)
    return np.ascontiguousarray(rel[i, j], dtype=np.int8)


def _census_vectorized(g: GtGraph) -> TriadCensus:
    n = g.n
    vec = _matrix_to_pair_vector(g.relation_matrix)[None, :]
    n_triples = len(_triple_pair_indices(n)[0])
    chunk = 500_000
    totals = dict.fromkeys(_CLASS_ORDER, 0)
    for start in range(0, max(n_triples, 1), chunk):
        counts = _census_batch_counts(vec, n, slice(start, min(start + chunk, n_triples)))
        for key in totals:
            totals[key] += int(counts[key][0])
    return TriadCensus(**totals)


def _census_python(g: GtGraph) -> TriadCensus:
    rel = g.relation_matrix.tolist()
    counts = dict.fromkeys(_CLASS_ORDER, 0)
    n = g.n
    for i in range(n - 2):
        ri = rel[i]
        for j in range(i + 1, n - 1):
            rij = ri[j]
            rj = rel[j]
            for k in range(j + 1, n):
                cls = _classify_rel(rij, ri[k], rj[k])
                counts[cls.name.lower()] += 1
    return TriadCensus(**counts)


def triad_census(g: GtGraph) -> TriadCensus:
    """Classify all C(n,3) triads by full enumeration.

    O(n^3); graphs past a small size take the vectorized path. For tie-free
    graphs the indices module offers an O(n^2) inconsistent-count shortcut.
    """
    if g.n <= _VECTORIZE_THRESHOLD:
        return _census_python(g)
    return _census_vectorized(g)


def iter_triads(g: GtGraph) -> Iterator[tuple[tuple[int, int, int], TriadClass]]:
    """All triads with their classes, lexicographic by vertex triple."""
    rel = g.relation_matrix.tolist()
    for i, j, k in itertools.combinations(range(g.n), 3):
        yield (i, j, k), _classify_rel(rel[i][j], rel[i][k], rel[j][k])


def list_inconsistent_triads(g: GtGraph) -> list[tuple[tuple[int, int, int], TriadClass]]:
    """The IT1/IT2/IT3 triads, sorted lexicographically."""
    return [(t, cls) for t, cls in iter_triads(g) if cls.is_inconsistent]
