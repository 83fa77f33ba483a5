"""Closed-form subtree counts for cliques, paths, stars and clique-independent joins.

These serve both as fast paths and as independent cross-checks against the
enumeration census.  Everything is exact integer / rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


def clique_subtree_count_by_order(n: int, k: int) -> int:
    """Subtrees with k vertices in the complete graph of order n.

    Evaluates C(n,k) * k^(k-2) with the convention k^(k-2) = 1 for k = 1
    (the formula is otherwise undefined there; k = 2 already gives 2^0).
    """
    if not 1 <= k <= n:
        raise ValueError(f"order k={k} outside 1..{n}")
    labelled_trees = 1 if k == 1 else k ** (k - 2)
    return comb(n, k) * labelled_trees


def clique_subtree_count(n: int) -> int:
    if n < 1:
        raise ValueError("need n >= 1")
    return sum(clique_subtree_count_by_order(n, k) for k in range(1, n + 1))


def clique_subtree_order_sum(n: int) -> int:
    if n < 1:
        raise ValueError("need n >= 1")
    return sum(k * clique_subtree_count_by_order(n, k) for k in range(1, n + 1))


def clique_mean_subtree_order(n: int) -> Fraction:
    return Fraction(clique_subtree_order_sum(n), clique_subtree_count(n))


def clique_spanning_fraction(n: int) -> Fraction:
    return Fraction(clique_subtree_count_by_order(n, n), clique_subtree_count(n))


def path_mean_subtree_order(n: int) -> Fraction:
    """Mean subtree order of the path: exactly (n+2)/3."""
    if n < 1:
        raise ValueError("need n >= 1")
    return Fraction(n + 2, 3)


def star_subtree_count(n: int) -> int:
    """Subtree count of the star of order n: 2^(n-1) + n - 1."""
    if n < 1:
        raise ValueError("need n >= 1")
    return (1 << (n - 1)) + n - 1


# -- clique-independent joins -------------------------------------------------


def join_spanning_tree_count(n: int, m: int) -> int:
    """Spanning trees of the order-n clique joined to m independent vertices.

    Evaluates (n+m)^(n-1) * n^(m-1); the m = 0 case degenerates to the
    n-vertex clique count n^(n-2).
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1, m >= 0")
    if n == 1:
        return 1  # a star has one spanning tree
    if m == 0:
        return n ** (n - 2)
    return (n + m) ** (n - 1) * n ** (m - 1)


def join_minus_edge_spanning_tree_count(n: int, m: int) -> int:
    """Spanning trees after deleting one edge between two clique vertices.

    Evaluates (n+m-2) * (n+m)^(n-2) * n^(m-1); needs n >= 2 so the deleted
    edge exists.
    """
    if n < 2:
        raise ValueError("deleted edge needs two clique vertices (n >= 2)")
    if m < 0:
        raise ValueError("need m >= 0")
    if n + m == 2:
        return 0  # K_2 minus its edge is disconnected
    if m == 0:
        return (n - 2) * n ** (n - 3)
    return (n + m - 2) * (n + m) ** (n - 2) * n ** (m - 1)


@dataclass(frozen=True)
class JoinSpec:
    """Clique part of size n joined to m independent vertices (n+m <= 64)."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 0:
            raise ValueError("need n >= 1, m >= 0")
        if self.n + self.m > 64:
            raise ValueError("join order capped at 64 vertices")


@dataclass(frozen=True)
class JoinCounts:
    """Subtree count / order sum of the join and of its edge-deleted variant."""

    count: int
    order_sum: int
    count_minus_edge: int
    order_sum_minus_edge: int

    @property
    def mean(self) -> Fraction:
        return Fraction(self.order_sum, self.count)

    @property
    def mean_minus_edge(self) -> Fraction:
        return Fraction(self.order_sum_minus_edge, self.count_minus_edge)


def join_subtree_counts(spec: JoinSpec) -> JoinCounts:
    """Exact subtree totals of the join via the double-sum decomposition.

    Every subtree spans an induced subgraph which is again a clique part of
    size j joined to i independent vertices; the j = 0 subgraphs contribute
    only the m singleton subtrees (the standalone "+m" term).  The deleted
    edge lies between two clique vertices, so a term splits by whether the
    chosen clique part contains both of its endpoints.
    """
    n, m = spec.n, spec.m
    count = m
    order_sum = m
    count_minus = m
    order_sum_minus = m
    for i in range(m + 1):
        cmi = comb(m, i)
        for j in range(1, n + 1):
            ways = comb(n, j) * cmi
            f = join_spanning_tree_count(j, i)
            count += ways * f
            order_sum += ways * (i + j) * f
            both = comb(n - 2, j - 2) * cmi if j >= 2 else 0
            if both:
                g = join_minus_edge_spanning_tree_count(j, i)
                keep = (ways - both) * f + both * g
            else:
                keep = ways * f
            count_minus += keep
            order_sum_minus += (i + j) * keep
    return JoinCounts(count, order_sum, count_minus, order_sum_minus)
