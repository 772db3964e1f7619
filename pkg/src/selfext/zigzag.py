"""Dimension combinatorics for the zigzag Schur algebra T^Z(m,d).

Basis labels are length-d multisets of triples (z, r, s) with r, s in [m] and
z a basis letter of the zigzag algebra on p-1 vertices: one idempotent e_j and
one loop c_j per vertex (even letters, degrees 0 and 2) and one arrow a_{i,j}
per ordered adjacent vertex pair (odd letters, degree 1).  Odd triples may not
repeat inside a word; even triples may.  Only label sets and degrees are
modeled, not signs or products.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class DimensionReport:
    """Orbit count of basis words, total and per total degree."""

    p: int
    m: int
    d: int
    total: int
    by_degree: tuple

    def degree(self, deg: int) -> int:
        return dict(self.by_degree).get(deg, 0)


@dataclass(frozen=True)
class GeneratorReport:
    """Count of the degree-1 generator labels: arrow choices times tails."""

    p: int
    m: int
    d: int
    arrow_choices: int
    tail_choices: int

    @property
    def total(self) -> int:
        return self.arrow_choices * self.tail_choices


def _check(p: int, m: int, d: int):
    if p < 3:
        raise ValueError(f"need p >= 3, got {p}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if d < 0:
        raise ValueError(f"need d >= 0, got {d}")


def _multichoose(n: int, k: int) -> int:
    """Multisets of size k from n symbols; 1 for the empty multiset."""
    if k == 0:
        return 1
    if n <= 0:
        return 0
    return comb(n + k - 1, k)


def _compositions(total: int, parts: int):
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def basis_dimension(p: int, m: int, d: int) -> DimensionReport:
    """Number of basis words, with the breakdown by total degree.

    A word picks k distinct odd triples (degree 1 each), a multiset of j loop
    triples (degree 2 each) and a multiset of d-k-j idempotent triples.
    """
    _check(p, m, d)
    odd = 2 * (p - 2) * m * m
    even_half = (p - 1) * m * m
    by_degree = {}
    for k in range(d + 1):
        for j in range(d - k + 1):
            rest = d - k - j
            count = (comb(odd, k) * _multichoose(even_half, j)
                     * _multichoose(even_half, rest))
            if count:
                deg = k + 2 * j
                by_degree[deg] = by_degree.get(deg, 0) + count
    total = sum(by_degree.values())
    return DimensionReport(p, m, d, total,
                           tuple(sorted(by_degree.items())))


def degree_zero_dimension(p: int, m: int, d: int) -> int:
    """Dimension of the degree-0 part, via the tensor factorization.

    The degree-0 algebra is a tensor product of p-1 classical Schur algebra
    pieces, one per vertex, so the dimension is a convolution over
    compositions of d.
    """
    _check(p, m, d)
    return sum(
        _product(_multichoose(m * m, dj) for dj in comp)
        for comp in _compositions(d, p - 1)
    )


def _product(factors) -> int:
    out = 1
    for f in factors:
        out *= f
    return out


def generator_count(p: int, m: int, d: int) -> GeneratorReport:
    """Count the degree-1 generator labels (one arrow with an idempotent tail).

    Each generator is an arrow triple in top position together with, per
    vertex, a multiset of idempotent triples indexed by rows 2..m; the tails
    across vertices form a composition of d-1.  Requires m >= d, the regime
    where these generate together with degree 0.
    """
    _check(p, m, d)
    if m < d:
        raise ValueError(f"generator count needs m >= d, got m={m}, d={d}")
    if d == 0:
        return GeneratorReport(p, m, d, 0, 0)
    tails = sum(
        _product(_multichoose(m - 1, dj) for dj in comp)
        for comp in _compositions(d - 1, p - 1)
    )
    return GeneratorReport(p, m, d, 2 * (p - 2), tails)
