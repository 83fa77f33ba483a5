"""Closed forms versus enumeration and matrix-tree counting."""

from fractions import Fraction

import pytest

from subtrees import (
    JoinSpec,
    census,
    clique,
    clique_mean_subtree_order,
    clique_spanning_fraction,
    clique_subtree_count,
    clique_subtree_count_by_order,
    clique_subtree_order_sum,
    join_clique_independent,
    join_minus_edge_spanning_tree_count,
    join_spanning_tree_count,
    join_subtree_counts,
    mean_subtree_order,
    path_graph,
    path_mean_subtree_order,
    spanning_tree_count,
    star_graph,
    star_subtree_count,
)


def test_clique_subtree_count_by_order_values():
    assert clique_subtree_count_by_order(4, 2) == 6
    for n in range(1, 12):
        assert clique_subtree_count_by_order(n, 1) == n
        if n >= 2:
            assert clique_subtree_count_by_order(n, n) == n ** (n - 2)
    with pytest.raises(ValueError):
        clique_subtree_count_by_order(4, 5)
    with pytest.raises(ValueError):
        clique_subtree_count_by_order(4, 0)


def test_clique_counts_against_census():
    for n in range(1, 10):
        c = census(clique(n))
        for k in range(1, n + 1):
            assert c.counts[k] == clique_subtree_count_by_order(n, k)
        assert c.num_subtrees == clique_subtree_count(n)
        assert c.order_sum == clique_subtree_order_sum(n)
        if n >= 1:
            assert c.mean == clique_mean_subtree_order(n)


def test_clique_mean_values():
    assert clique_mean_subtree_order(3) == 2
    assert clique_subtree_count(4) == 38


def test_path_mean_formula_against_census():
    for n in range(1, 21):
        assert path_mean_subtree_order(n) == mean_subtree_order(path_graph(n))
    assert path_mean_subtree_order(2) == Fraction(4, 3)


def test_star_subtree_count():
    assert star_subtree_count(3) == 6 == census(path_graph(3)).num_subtrees
    assert star_subtree_count(5) == 20 == census(star_graph(5)).num_subtrees


def test_join_spanning_formulas_vs_matrix_tree():
    for n in range(1, 7):
        for m in range(0, 6):
            g = join_clique_independent(n, m)
            assert join_spanning_tree_count(n, m) == spanning_tree_count(g)
            if n >= 2:
                assert join_minus_edge_spanning_tree_count(n, m) == spanning_tree_count(
                    g.delete_edge(0, 1)
                )
    assert join_spanning_tree_count(2, 2) == 8
    assert join_minus_edge_spanning_tree_count(2, 2) == 4
    for n in range(2, 9):
        assert join_spanning_tree_count(n, 0) == n ** (n - 2)
    with pytest.raises(ValueError):
        join_minus_edge_spanning_tree_count(1, 3)


def test_join_counts_against_census():
    for n in range(1, 9):
        for m in range(0, 10 - n):
            jc = join_subtree_counts(JoinSpec(n, m))
            g = join_clique_independent(n, m)
            c = census(g)
            assert jc.count == c.num_subtrees
            assert jc.order_sum == c.order_sum
            if n >= 2:
                cd = census(g.delete_edge(0, 1))
                assert jc.count_minus_edge == cd.num_subtrees
                assert jc.order_sum_minus_edge == cd.order_sum


def test_join_counts_triangle_cross_check():
    jc = join_subtree_counts(JoinSpec(2, 1))
    assert jc.count == 9  # the join of an edge with one extra vertex is a triangle


def test_join_deletion_known_cases():
    for n, m in [(2, 6), (2, 7), (2, 8), (10, 9)]:
        jc = join_subtree_counts(JoinSpec(n, m))
        assert jc.mean < jc.mean_minus_edge, (n, m)
    # small joins go the other way
    jc = join_subtree_counts(JoinSpec(2, 2))
    assert jc.mean > jc.mean_minus_edge


def test_join_spec_validation():
    with pytest.raises(ValueError):
        JoinSpec(0, 3)
    with pytest.raises(ValueError):
        JoinSpec(2, -1)
    with pytest.raises(ValueError):
        JoinSpec(60, 10)


def test_clique_trend_ratios():
    import math

    # spanning fraction climbs towards e^{-1/e}; gap shrinks monotonically
    target = math.exp(-math.exp(-1))
    gaps = [abs(float(clique_spanning_fraction(n)) - target) for n in range(2, 21)]
    assert all(a >= b for a, b in zip(gaps, gaps[1:]))
    # subtree count over n^{n-2} sinks towards e^{1/e} from above
    target = math.exp(math.exp(-1))
    ratios = [
        Fraction(clique_subtree_count(n), n ** (n - 2)) for n in range(12, 21)
    ]
    assert all(float(r) > target for r in ratios)
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
