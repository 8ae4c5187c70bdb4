"""Bounding functions over (n, m): consistent/inconsistent triad limits.

For a gt-graph with n vertices and m directed edges:

  c_bound:  minimum count of consistent triads with a dominant vertex
             (the tie-assisted and transitive kinds);
  d_bound:  lower bound on 3*|T0| + |T1| (tie-degree counting);
  e_bound:  lower bound on |T2,3| (directed-degree counting);
  f_bound:  lower bound on |T0|, may be fractional or negative;
  g_bound:  c_bound + max(0, ceil(f_bound)): minimum consistent triads;
  h_bound:  C(n,3) - g_bound: maximum inconsistent triads.

Everything is exact rational arithmetic; f_bound is the only value exposed
unrounded (it legitimately takes values like 8/3). Floors on rationals are
mathematical floors (toward -infinity).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import IO, Iterator

from .errors import MOutOfRange, ValidationError

__all__ = [
    "c_bound",
    "d_bound",
    "e_bound",
    "f_bound",
    "f_bound_from_parts",
    "f_bound_clamped",
    "g_bound",
    "h_bound",
    "h_argmax",
    "BoundsRow",
    "bounds_table",
    "write_bounds_csv",
]


def _check(n: int, m: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
    if not isinstance(m, int) or not 0 <= m <= comb(n, 2):
        raise MOutOfRange(n, m)


def c_bound(n: int, m: int) -> int:
    """(1/2) * floor(m/n) * (2m - n*floor(m/n) - n); always an integer."""
    _check(n, m)
    j = m // n
    value = Fraction(j * (2 * m - n * j - n), 2)
    assert value.denominator == 1
    return int(value)


def d_bound(n: int, m: int) -> int:
    """(1/2)(n - floor(2m/n) - 2)(n^2 + n(floor(2m/n) - 1) - 4m)."""
    _check(n, m)
    j = (2 * m) // n
    value = Fraction((n - j - 2) * (n * n + n * (j - 1) - 4 * m), 2)
    assert value.denominator == 1
    return int(value)


def e_bound(n: int, m: int) -> Fraction:
    """(1/6) * floor(2m/n) * (4m - n(floor(2m/n) + 1)); may be fractional."""
    _check(n, m)
    j = (2 * m) // n
    return Fraction(j * (4 * m - n * (j + 1)), 6)


def f_bound(n: int, m: int) -> Fraction:
    """(1/6)(-2n*j^2 + (8m-2n)j + (n-2)((n-1)n - 6m)) with j = floor(2m/n)."""
    _check(n, m)
    j = (2 * m) // n
    return Fraction(-2 * n * j * j + (8 * m - 2 * n) * j + (n - 2) * ((n - 1) * n - 6 * m), 6)


def f_bound_from_parts(n: int, m: int) -> Fraction:
    """Equivalent form (d_bound + e_bound - C(n,3)) / 2.

    Kept alongside the expanded polynomial; the test suite asserts the two
    agree everywhere rather than silently reconciling them.
    """
    _check(n, m)
    return (d_bound(n, m) + e_bound(n, m) - comb(n, 3)) / 2


def f_bound_clamped(n: int, m: int) -> int:
    """max(0, ceil(f_bound)), the usable integer lower bound on |T0|."""
    return max(0, math.ceil(f_bound(n, m)))


def g_bound(n: int, m: int) -> int:
    """Minimum consistent triads: c_bound + clamped f_bound."""
    return c_bound(n, m) + f_bound_clamped(n, m)


def h_bound(n: int, m: int) -> int:
    """Maximum inconsistent triads: C(n,3) - g_bound."""
    return comb(n, 3) - g_bound(n, m)


def h_argmax(n: int) -> int:
    """Smallest m maximizing h_bound(n, m) over 0..C(n,2).

    For n >= 4 this lands exactly on dt_edge_count(n), where the maximum
    value is the tie-aware triad maximum.
    """
    if n < 3:
        raise ValidationError(f"need n >= 3, got {n}")
    best_m, best_h = 0, -1
    for m in range(comb(n, 2) + 1):
        h = h_bound(n, m)
        if h > best_h:
            best_m, best_h = m, h
    return best_m


@dataclass(frozen=True)
class BoundsRow:
    """One (n, m) evaluation of the whole bounding family."""

    n: int
    m: int
    c_val: int
    d_val: int
    e_val: Fraction
    f_val: Fraction
    f_clamped: int
    g_val: int
    h_val: int


def bounds_table(n: int) -> Iterator[BoundsRow]:
    """Stream one BoundsRow per m = 0..C(n,2); O(1) memory per row."""
    if n < 3:
        raise ValidationError(f"need n >= 3, got {n}")
    for m in range(comb(n, 2) + 1):
        f = f_bound(n, m)
        fc = max(0, math.ceil(f))
        c = c_bound(n, m)
        g = c + fc
        yield BoundsRow(
            n=n,
            m=m,
            c_val=c,
            d_val=d_bound(n, m),
            e_val=e_bound(n, m),
            f_val=f,
            f_clamped=fc,
            g_val=g,
            h_val=comb(n, 3) - g,
        )


_CSV_HEADER = ["n", "m", "C", "D", "E", "F", "F_decimal", "F_clamped", "G", "H"]


def write_bounds_csv(n: int, fp: IO[str]) -> int:
    """Emit the plot-ready table; returns the number of data rows.

    E and F are exact fraction strings ("2", "8/3"); F also gets a decimal
    column for tools that cannot parse fractions.
    """
    writer = csv.writer(fp)
    writer.writerow(_CSV_HEADER)
    rows = 0
    for row in bounds_table(n):
        writer.writerow(
            [
                row.n,
                row.m,
                row.c_val,
                row.d_val,
                str(row.e_val),
                str(row.f_val),
                float(row.f_val),
                row.f_clamped,
                row.g_val,
                row.h_val,
            ]
        )
        rows += 1
    return rows
