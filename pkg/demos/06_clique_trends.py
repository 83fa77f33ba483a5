#!/usr/bin/env python3
"""How clique subtree statistics drift with order.

Two informational trends, computed from exact rationals: the probability
that a uniform random subtree of the clique is spanning, and the subtree
count measured against the spanning-tree count.  The printed limits are
classical asymptotics; nothing here asserts them, the table just shows the
monotone drift.
"""

import math
from fractions import Fraction

from subtrees import clique_spanning_fraction, clique_subtree_count, clique_mean_subtree_order

p_limit = math.exp(-math.exp(-1))
r_limit = math.exp(math.exp(-1))
print(f"reference points: e^(-1/e) = {p_limit:.6f}, e^(1/e) = {r_limit:.6f}")
print()
print(" n   mean(K_n)      n-mean    p(K_n)      N/n^(n-2)")
for n in range(2, 21):
    mu = clique_mean_subtree_order(n)
    p = clique_spanning_fraction(n)
    r = Fraction(clique_subtree_count(n), n ** (n - 2))
    print(
        f"{n:2d}   {float(mu):<12.8g}  {n - float(mu):.6f}  {float(p):.8f}  {float(r):.8f}"
    )

print()
print("the deficit n - mean(K_n) hovers near 1/e =", f"{math.exp(-1):.6f};")
print("p(K_n) climbs toward e^(-1/e) while N/n^(n-2) sinks toward e^(1/e).")
