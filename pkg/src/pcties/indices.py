"""Closed-form triad maxima and the consistency/inconsistency indices.

All index values are exact rationals (fractions.Fraction); decimal rendering
belongs to the I/O layer. Counting formulas use Python integers, so nothing
overflows for any practical n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import GtGraph, OrdinalPcMatrix, matrix_to_graph, triad_census
from .errors import NotATournament, TooSmall, ValidationError

__all__ = [
    "max_inconsistent_no_ties",
    "max_inconsistent_with_ties",
    "max_inconsistent_with_ties_binomial",
    "dt_edge_count",
    "count_inconsistent",
    "count_inconsistent_tournament_fast",
    "IndexReport",
    "analyze",
    "eta_limits",
]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"alternative count must be a positive integer, got {n!r}")


def max_inconsistent_no_ties(n: int) -> int:
    """Most inconsistent triads a tie-free n-way comparison set can hold.

    (n^3 - n)/24 for odd n, (n^3 - 4n)/24 for even n; 0 below n = 3.
    """
    _check_n(n)
    if n < 3:
        return 0
    if n % 2:
        return (n**3 - n) // 24
    return (n**3 - 4 * n) // 24


def max_inconsistent_with_ties(n: int) -> int:
    """Most inconsistent triads when ties are allowed (piecewise cubic).

    Four residues of n mod 4, each an exact integer over 96. Agrees with
    max_inconsistent_with_ties_binomial for every n; the equality is part of
    the acceptance suite.
    """
    _check_n(n)
    if n < 3:
        return 0
    r = n % 4
    if r == 0:
        num = 13 * n**3 - 24 * n**2 - 16 * n
    elif r == 1:
        num = 13 * n**3 - 24 * n**2 - 19 * n + 30
    elif r == 2:
        num = 13 * n**3 - 24 * n**2 - 4 * n
    else:
        num = 13 * n**3 - 24 * n**2 - 19 * n + 18
    assert num % 96 == 0
    return num // 96


def max_inconsistent_with_ties_binomial(n: int) -> int:
    """Binomial form of the same maximum, via the two-part construction:

    C(n,3) minus the consistent triads forced inside maximal tournaments on
    floor(n/2) and ceil(n/2) vertices.
    """
    _check_n(n)
    lo, hi = n // 2, (n + 1) // 2
    return (
        comb(n, 3)
        - (comb(lo, 3) - max_inconsistent_no_ties(lo))
        - (comb(hi, 3) - max_inconsistent_no_ties(hi))
    )


def dt_edge_count(n: int) -> int:
    """Directed edges in the maximal double tournament: C(fl,2) + C(ce,2).

    Equals q(q-1) for n = 2q and q^2 for n = 2q+1. Also the minimum number
    of directed edges covering every triad (see extremal.min_triad_cover).
    """
    _check_n(n)
    return comb(n // 2, 2) + comb((n + 1) // 2, 2)


def count_inconsistent(g: GtGraph) -> int:
    """Inconsistent triads in a gt-graph.

    Tie-free graphs dispatch to the O(n^2) degree formula; otherwise the
    O(n^3) census runs.
    """
    if g.is_tournament:
        return count_inconsistent_tournament_fast(g)
    return triad_census(g).inconsistent_total


def count_inconsistent_tournament_fast(g: GtGraph) -> int:
    """C(n,3) - sum_v C(deg_in(v), 2); valid only without ties.

    Every consistent triad of a tournament has a unique vertex beating the
    other two, so the sum counts exactly the consistent triads.
    """
    if not g.is_tournament:
        tie = min(g.undirected)
        raise NotATournament(tie)
    deg_in = g.in_degrees().astype(object)
    consistent = int((deg_in * (deg_in - 1) // 2).sum())
    return comb(g.n, 3) - consistent


@dataclass(frozen=True)
class IndexReport:
    """Inconsistency summary for one judgment matrix.

    zeta_value is the consistency coefficient: 1 minus the ratio of
    inconsistent triads to the maximum possible. used_ties records which
    maximum served as the denominator (the tie-aware one, or the tie-free
    one applicable to tournaments only). eta is the absolute share of
    inconsistent triads among all C(n,3).
    """

    n: int
    inconsistent_count: int
    max_possible: int
    zeta_value: Fraction
    inconsistency_ratio: Fraction
    eta: Fraction
    used_ties: bool


def analyze(m: OrdinalPcMatrix, *, force_ties_denominator: bool = False) -> IndexReport:
    """Compute the consistency coefficient and absolute index for a matrix.

    Tournaments use the tie-free maximum by default; pass
    force_ties_denominator=True to rank them against the tie-aware maximum
    instead (it is defined for both). Matrices with ties always use the
    tie-aware maximum. Raises TooSmall for n < 3, where no triad exists and
    the indices are undefined.
    """
    if m.n < 3:
        raise TooSmall(m.n)
    g = matrix_to_graph(m)
    inconsistent = count_inconsistent(g)
    use_ties = force_ties_denominator or not g.is_tournament
    denom = max_inconsistent_with_ties(m.n) if use_ties else max_inconsistent_no_ties(m.n)
    ratio = Fraction(inconsistent, denom)
    return IndexReport(
        n=m.n,
        inconsistent_count=inconsistent,
        max_possible=denom,
        zeta_value=1 - ratio,
        inconsistency_ratio=ratio,
        eta=Fraction(inconsistent, comb(m.n, 3)),
        used_ties=use_ties,
    )


def eta_limits(n: int) -> tuple[Fraction, Fraction]:
    """Largest possible eta without and with ties, as exact rationals.

    As n grows these approach 1/4 and 13/16 = 0.8125.
    """
    _check_n(n)
    if n < 3:
        raise TooSmall(n)
    total = comb(n, 3)
    return (
        Fraction(max_inconsistent_no_ties(n), total),
        Fraction(max_inconsistent_with_ties(n), total),
    )
