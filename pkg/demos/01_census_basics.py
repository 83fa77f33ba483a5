#!/usr/bin/env python3
"""A first tour: exact subtree censuses and the mean subtree order.

A subtree of a graph is any subgraph that is a tree (not necessarily
induced, not necessarily spanning).  The census buckets them by order;
everything is exact, so means come out as fractions, never floats.
"""

from subtrees import (
    census,
    clique,
    cycle,
    mean_subtree_order,
    path_graph,
    spanning_fraction,
    star_graph,
    average_connected_set_size,
)

for name, g in [
    ("path P_6", path_graph(6)),
    ("star S_6", star_graph(6)),
    ("cycle C_6", cycle(6)),
    ("clique K_6", clique(6)),
]:
    c = census(g)
    print(f"{name}:")
    print(f"  subtree counts by order: {list(c.counts[1:])}")
    print(f"  total {c.num_subtrees} subtrees, order sum {c.order_sum}")
    print(f"  mean subtree order    = {c.mean} = {float(c.mean):.6f}")
    print(f"  spanning fraction     = {spanning_fraction(g)}")
    print(f"  avg connected-set size = {average_connected_set_size(g)}")
    print()

# The path is the minimiser: its mean is exactly (n+2)/3, and every other
# connected graph of the same order sits strictly above it.
for n in range(2, 9):
    mn = mean_subtree_order(path_graph(n))
    print(f"mean(P_{n}) = {mn}  ( (n+2)/3 = {n+2}/3 )")

# Per-vertex restrictions come from the same census pass: the counts of
# subtrees through each vertex sum to the total order sum.
g = star_graph(5)
c = census(g)
print("\nstar S_5 per-vertex subtree counts:", list(c.vertex_counts))
assert sum(c.vertex_counts) == c.order_sum
print("local mean at the centre:", c.mean_at_vertex(0))
print("local mean at a leaf:   ", c.mean_at_vertex(1))
