"""The conjecture-check battery.

Every check is a pure function of its input graph and returns a
:class:`CheckVerdict`.  Status semantics:

* ``holds``  - the checked statement is true on this graph;
* ``fails``  - a *proven* statement is violated, which signals an
  implementation bug, never new mathematics;
* ``report-only`` - informational outcome, including violations of open
  conjectures (those are findings; the witness carries ``finding: True``).

All inequality verdicts are decided by exact integer cross-multiplication
or exact rationals; floating point appears only in human-facing report
fields.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .canon import canonical_form, transposition_automorphisms
from .census import (
    SubtreeConstraint,
    census,
    census_containing,
    average_connected_set_size,
)
from .closedforms import (
    clique_subtree_count,
    clique_subtree_count_by_order,
    clique_subtree_order_sum,
    star_subtree_count,
)
from .families import clique as build_clique
from .families import modified_double_broom, path_graph, star_graph
from .graphs import Graph, maximal_matchings_of_complement, to_graph6

# Orders up to which the clique-extremality conjectures have been settled
# exhaustively; beyond that their violation is a finding, not a failure.
VERIFIED_EXHAUSTIVE_ORDER = 10

HOLDS = "holds"
FAILS = "fails"
REPORT = "report-only"


@dataclass
class CheckVerdict:
    check: str
    graph_id: str
    status: str
    witness: dict
    mean: Fraction | None = None
    runtime_ms: int = 0


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _timed(started: float) -> int:
    return int((time.perf_counter() - started) * 1000)


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise ValueError("check requires a connected graph")


def _is_path(g: Graph) -> bool:
    if g.n <= 32:
        return canonical_form(g) == canonical_form(path_graph(g.n))
    # beyond the certificate engine's range: a connected graph is a path iff
    # no degree exceeds 2 and exactly two vertices are leaves (exact, not a
    # heuristic, given connectivity)
    degrees = [g.degree(v) for v in range(g.n)]
    return max(degrees) <= 2 and degrees.count(1) == 2 and g.is_connected()


def check_min_path(g: Graph) -> CheckVerdict:
    """Mean subtree order is at least (n+2)/3, tight exactly on paths."""
    started = time.perf_counter()
    _require_connected(g)
    n = g.n
    mu = census(g).mean
    bound = Fraction(n + 2, 3)
    witness: dict = {"mu": frac_str(mu), "bound": frac_str(bound)}
    if mu < bound:
        status = FAILS
    elif mu == bound:
        witness["equality"] = True
        status = HOLDS if _is_path(g) else FAILS
    else:
        witness["equality"] = False
        status = HOLDS
    return CheckVerdict("min-path", to_graph6(g), status, witness, mu, _timed(started))


def check_max_clique(g: Graph) -> CheckVerdict:
    """Mean subtree order is at most that of the clique of the same order."""
    started = time.perf_counter()
    _require_connected(g)
    n = g.n
    mu = census(g).mean
    # cross-multiplied against the closed-form clique totals
    rn, nn = clique_subtree_order_sum(n), clique_subtree_count(n)
    holds = mu.numerator * nn <= rn * mu.denominator
    equal = mu.numerator * nn == rn * mu.denominator
    witness: dict = {"mu": frac_str(mu), "clique_mu": f"{rn}/{nn}"}
    if not holds:
        status = FAILS if n <= VERIFIED_EXHAUSTIVE_ORDER else REPORT
        witness["finding"] = True
    elif equal:
        is_clique = canonical_form(g) == canonical_form(build_clique(n))
        witness["equality"] = True
        status = HOLDS if is_clique else FAILS
    else:
        status = HOLDS
    return CheckVerdict("max-clique", to_graph6(g), status, witness, mu, _timed(started))


def check_edge_deletion_exists(g: Graph) -> CheckVerdict:
    """Some connectivity-preserving deletion lowers the mean (open)."""
    started = time.perf_counter()
    _require_connected(g)
    gid = to_graph6(g)
    if g.is_tree():
        return CheckVerdict(
            "edge-deletion-exists", gid, REPORT, {"vacuous": "tree"}, None, _timed(started)
        )
    mu = census(g).mean
    for u, v in g.edges():
        if g.is_bridge(u, v):
            continue
        mu2 = census(g.delete_edge(u, v)).mean
        if mu2 < mu:
            witness = {"edge": [u, v], "mu_after": frac_str(mu2)}
            return CheckVerdict(
                "edge-deletion-exists", gid, HOLDS, witness, mu, _timed(started)
            )
    witness = {"found": False, "finding": True}
    return CheckVerdict("edge-deletion-exists", gid, REPORT, witness, mu, _timed(started))


def check_edge_addition_exists(g: Graph) -> CheckVerdict:
    """Some edge addition raises the mean (open)."""
    started = time.perf_counter()
    _require_connected(g)
    gid = to_graph6(g)
    n = g.n
    if g.edge_count == n * (n - 1) // 2:
        return CheckVerdict(
            "edge-addition-exists", gid, REPORT, {"vacuous": "complete"}, None, _timed(started)
        )
    mu = census(g).mean
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            mu2 = census(g.add_edge(u, v)).mean
            if mu2 > mu:
                witness = {"edge": [u, v], "mu_after": frac_str(mu2)}
                return CheckVerdict(
                    "edge-addition-exists", gid, HOLDS, witness, mu, _timed(started)
                )
    witness = {"found": False, "finding": True}
    return CheckVerdict("edge-addition-exists", gid, REPORT, witness, mu, _timed(started))


def check_contraction(g: Graph) -> CheckVerdict:
    """Every contraction lowers the mean by at least 1/3 (proven on trees).

    Contraction is simple-graph contraction (parallel edges merged); the
    verdict records that choice.  Equality is expected exactly on paths.
    """
    started = time.perf_counter()
    _require_connected(g)
    gid = to_graph6(g)
    if g.n < 2:
        return CheckVerdict(
            "contraction-gap", gid, REPORT, {"vacuous": "n < 2"}, None, _timed(started)
        )
    mu = census(g).mean
    third = Fraction(1, 3)
    min_gap = None
    min_edge = None
    violations = []
    equality_edges = []
    for u, v in g.edges():
        gap = mu - census(g.contract_edge(u, v)).mean
        if min_gap is None or gap < min_gap:
            min_gap, min_edge = gap, (u, v)
        if gap < third:
            violations.append([u, v])
        elif gap == third:
            equality_edges.append([u, v])
    is_path = _is_path(g)
    is_tree = g.is_tree()
    pattern_broken = (is_path and len(equality_edges) != g.edge_count) or (
        not is_path and bool(equality_edges)
    )
    witness = {
        "contraction": "simple",
        "min_gap": frac_str(min_gap),
        "min_edge": list(min_edge),
        "equality_edges": equality_edges,
        "is_path": is_path,
        "violations": violations,
    }
    if violations or pattern_broken:
        witness["finding"] = True
        status = FAILS if is_tree else REPORT
    else:
        status = HOLDS
    return CheckVerdict("contraction-gap", gid, status, witness, mu, _timed(started))


def check_local_global(g: Graph) -> CheckVerdict:
    """Some vertex and some edge have local mean above the global mean.

    Also reports the non-monotone data: vertices v with mean-at-v <= mean,
    and for those vertices the incident edges e with mean-at-e <= mean-at-v.
    """
    started = time.perf_counter()
    _require_connected(g)
    gid = to_graph6(g)
    if g.n < 2:
        return CheckVerdict(
            "local-global", gid, REPORT, {"vacuous": "n < 2"}, None, _timed(started)
        )
    c = census(g)
    mu = c.mean
    vertex_means = [c.mean_at_vertex(v) for v in range(g.n)]
    edge_means = {}
    for u, v in g.edges():
        nc, rc = census_containing(
            g, SubtreeConstraint(frozenset([u, v]), frozenset([(u, v)]))
        )
        edge_means[(u, v)] = Fraction(rc, nc)
    exists_vertex = any(mv > mu for mv in vertex_means)
    exists_edge = any(me > mu for me in edge_means.values())
    low_vertices = []
    for v in range(g.n):
        if vertex_means[v] <= mu:
            low_edges = [
                [u, w]
                for (u, w), me in edge_means.items()
                if (u == v or w == v) and me <= vertex_means[v]
            ]
            low_vertices.append({"vertex": v, "mu_v": frac_str(vertex_means[v]), "low_edges": low_edges})
    witness = {
        "exists_vertex_above": exists_vertex,
        "exists_edge_above": exists_edge,
        "non_monotone_vertices": low_vertices,
    }
    status = HOLDS if exists_vertex and exists_edge else FAILS
    return CheckVerdict("local-global", gid, status, witness, mu, _timed(started))


def check_ratio_chain(g: Graph) -> CheckVerdict:
    """The clique-ratio battery on subtree counts, all cross-multiplied.

    (a) near-spanning ratio s_{n-1} s_n(clique) >= s_{n-1}(clique) s_n;
    (b) the full chain over all order pairs j <= k;
    (c) spanning fraction at most the clique's;
    (d) spanning fraction at least the star's, equality only for stars;
    (e) mean at most the clique's.
    """
    started = time.perf_counter()
    _require_connected(g)
    gid = to_graph6(g)
    n = g.n
    c = census(g)
    mu = c.mean
    s = c.counts
    sk = [0] + [clique_subtree_count_by_order(n, k) for k in range(1, n + 1)]
    results = {}
    results["near_spanning"] = s[n - 1] * sk[n] >= sk[n - 1] * s[n] if n >= 2 else True
    chain_ok = True
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            if s[j] * sk[k] < sk[j] * s[k]:
                chain_ok = False
                results.setdefault("chain_violation", [j, k])
    results["chain"] = chain_ok
    nn = clique_subtree_count(n)
    results["spanning_le_clique"] = s[n] * nn <= sk[n] * c.num_subtrees
    star_n = star_subtree_count(n)
    ge_star = s[n] * star_n >= c.num_subtrees
    results["spanning_ge_star"] = ge_star
    star_equal = s[n] * star_n == c.num_subtrees
    if ge_star and star_equal:
        if canonical_form(g) != canonical_form(star_graph(n)):
            results["spanning_ge_star"] = False
            results["star_equality_off_star"] = True
    rn = clique_subtree_order_sum(n)
    results["mean_le_clique"] = mu.numerator * nn <= rn * mu.denominator
    all_ok = all(results[k] for k in
                 ("near_spanning", "chain", "spanning_le_clique", "spanning_ge_star", "mean_le_clique"))
    witness = dict(results)
    witness["mu"] = frac_str(mu)
    if all_ok:
        status = HOLDS
    else:
        witness["finding"] = True
        # (d) is proven at every order; the clique-extremality parts are
        # settled only up to the exhaustively verified order
        proven_broken = not results["spanning_ge_star"]
        status = FAILS if (proven_broken or n <= VERIFIED_EXHAUSTIVE_ORDER) else REPORT
    return CheckVerdict("ratio-chain", gid, status, witness, mu, _timed(started))


def check_mu_vs_av(g: Graph) -> CheckVerdict:
    """Mean subtree order versus mean connected-set size (open question).

    Report-only: records the exact sign.  Equality is proven on trees, so a
    tree with unequal values fails.
    """
    started = time.perf_counter()
    _require_connected(g)
    gid = to_graph6(g)
    mu = census(g).mean
    av = average_connected_set_size(g)
    sign = (mu > av) - (mu < av)
    is_tree = g.is_tree()
    witness = {"mu": frac_str(mu), "av": frac_str(av), "sign": sign, "tree": is_tree}
    if is_tree and sign != 0:
        status = FAILS
    else:
        status = REPORT
        if sign < 0:
            witness["finding"] = True
    return CheckVerdict("mean-vs-average", gid, status, witness, mu, _timed(started))


def _small_subtree_constraints(g: Graph, max_order: int):
    """All subtree constraints of order <= max_order (vertices, edges, cherries)."""
    for v in range(g.n):
        yield SubtreeConstraint(frozenset([v]))
    if max_order >= 2:
        for u, v in g.edges():
            yield SubtreeConstraint(frozenset([u, v]), frozenset([(u, v)]))
    if max_order >= 3:
        for mid in range(g.n):
            nbrs = [w for w in range(g.n) if g.has_edge(mid, w)]
            for i in range(len(nbrs)):
                for j in range(i + 1, len(nbrs)):
                    a, b = nbrs[i], nbrs[j]
                    yield SubtreeConstraint(
                        frozenset([a, mid, b]), frozenset([(a, mid), (mid, b)])
                    )
    if max_order > 3:
        raise ValueError("constraint orders above 3 are not enumerated")


def check_local_mean_bound(g: Graph, max_order: int = 3) -> CheckVerdict:
    """Local mean at any small subtree is at least (n + |T|)/2 (proven)."""
    started = time.perf_counter()
    _require_connected(g)
    gid = to_graph6(g)
    n = g.n
    worst = None
    violated = None
    for constraint in _small_subtree_constraints(g, max_order):
        t = len(constraint.vertices)
        nc, rc = census_containing(g, constraint)
        # mu(g, T) >= (n + t)/2  <=>  2 rc >= (n + t) nc
        slack = 2 * rc - (n + t) * nc
        if worst is None or slack < worst[0]:
            worst = (slack, sorted(constraint.vertices), nc)
        if slack < 0:
            violated = sorted(constraint.vertices)
            break
    witness = {"max_constraint_order": max_order, "min_slack": worst[0], "at": worst[1]}
    if violated is not None:
        witness["violated_at"] = violated
        status = FAILS
    else:
        status = HOLDS
    return CheckVerdict("local-mean-bound", gid, status, witness, None, _timed(started))


def check_vertex_share_bound(g: Graph) -> CheckVerdict:
    """Some non-cut vertex lies in at least a 2/(n+1) share of all subtrees.

    Proven, with equality exactly on paths (both ends of a path hit the
    bound; anything else has a strictly better vertex).
    """
    started = time.perf_counter()
    _require_connected(g)
    gid = to_graph6(g)
    n = g.n
    if n < 3:
        return CheckVerdict(
            "vertex-share-bound", gid, REPORT, {"vacuous": "n < 3"}, None, _timed(started)
        )
    c = census(g)
    best = None
    best_vertex = None
    for v in range(n):
        if g.is_cut_vertex(v):
            continue
        margin = (n + 1) * c.vertex_counts[v] - 2 * c.num_subtrees
        if best is None or margin > best:
            best, best_vertex = margin, v
    is_path = _is_path(g)
    witness = {"best_vertex": best_vertex, "margin": best, "is_path": is_path}
    ok = best is not None and best >= 0 and ((best == 0) == is_path)
    status = HOLDS if ok else FAILS
    return CheckVerdict("vertex-share-bound", gid, status, witness, c.mean, _timed(started))


def _matching_orbits(g: Graph, matchings: list[tuple]) -> dict[int, list[int]]:
    # Collapse matchings equivalent under twin-swap automorphisms of g.
    perms = []
    for u, v in transposition_automorphisms(g):
        p = list(range(g.n))
        p[u], p[v] = v, u
        perms.append(p)
    index = {frozenset(m): i for i, m in enumerate(matchings)}
    parent = list(range(len(matchings)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if perms:
        for i, m in enumerate(matchings):
            for p in perms:
                image = frozenset(
                    (p[u], p[v]) if p[u] < p[v] else (p[v], p[u]) for u, v in m
                )
                j = index.get(image)
                if j is not None and find(i) != find(j):
                    parent[find(i)] = find(j)
    orbits: dict[int, list[int]] = {}
    for i in range(len(matchings)):
        orbits.setdefault(find(i), []).append(i)
    return orbits


def check_matchings(g: Graph) -> CheckVerdict:
    """Sign of the mean change when a maximal complement matching is added.

    Every maximal matching of the complement is classified; the mean is
    computed once per isomorphism class of the augmented graph (twin-swap
    orbits first, canonical certificates second).  ``holds`` means every
    matching strictly lowers the mean.
    """
    started = time.perf_counter()
    _require_connected(g)
    gid = to_graph6(g)
    mu = census(g).mean
    matchings = list(maximal_matchings_of_complement(g))
    orbits = _matching_orbits(g, matchings)
    tally = {-1: 0, 0: 0, 1: 0}
    sign_by_cert: dict[bytes, int] = {}
    for root, members in orbits.items():
        augmented = g.add_edges(matchings[root])
        cert = canonical_form(augmented) if g.n <= 32 else None
        if cert is not None and cert in sign_by_cert:
            sign = sign_by_cert[cert]
        else:
            mu2 = census(augmented).mean
            sign = (mu2 > mu) - (mu2 < mu)
            if cert is not None:
                sign_by_cert[cert] = sign
        tally[sign] += len(members)
    witness = {
        "matchings": len(matchings),
        "orbits": len(orbits),
        "decrease": tally[-1],
        "unchanged": tally[0],
        "increase": tally[1],
    }
    all_negative = tally[-1] == len(matchings) and len(matchings) > 0
    status = HOLDS if all_negative else REPORT
    return CheckVerdict("matchings", gid, status, witness, mu, _timed(started))


def check_transitive_inequalities(g: Graph) -> CheckVerdict:
    """For vertex- and edge-transitive graphs: edge mean > vertex mean > mean.

    Verifies that all per-vertex and all per-edge local means agree (a
    contradiction is an input error, not a conjecture failure), the strict
    chain, and the exact convex-combination identity tying the three means
    together through the order-weighted subtree counts.
    """
    started = time.perf_counter()
    _require_connected(g)
    if g.n < 2:
        raise ValueError("transitivity check needs n >= 2")
    gid = to_graph6(g)
    c = census(g)
    mu = c.mean
    vertex_means = {c.mean_at_vertex(v) for v in range(g.n)}
    if len(vertex_means) != 1:
        raise ValueError("input is not vertex-transitive: per-vertex means differ")
    mu_v = vertex_means.pop()
    edge_means = set()
    for u, v in g.edges():
        nc, rc = census_containing(
            g, SubtreeConstraint(frozenset([u, v]), frozenset([(u, v)]))
        )
        edge_means.add(Fraction(rc, nc))
    if len(edge_means) != 1:
        raise ValueError("input is not edge-transitive: per-edge means differ")
    mu_e = edge_means.pop()
    n_total = c.num_subtrees
    r_total = c.order_sum
    identity = r_total * mu_v == n_total * mu + (r_total - n_total) * mu_e
    chain = mu_e > mu_v > mu
    witness = {
        "mu": frac_str(mu),
        "mu_vertex": frac_str(mu_v),
        "mu_edge": frac_str(mu_e),
        "chain": chain,
        "convex_identity": identity,
    }
    status = HOLDS if chain and identity else FAILS
    return CheckVerdict("transitive", gid, status, witness, mu, _timed(started))


# -- reports beyond single verdicts -------------------------------------------


@dataclass
class EdgeAdditionClass:
    representative: tuple[int, int]
    edges: list[tuple[int, int]]
    mean_delta: Fraction
    sign: int

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass
class EdgeAdditionReport:
    graph_id: str
    base_mean: Fraction
    classes: list[EdgeAdditionClass] = field(default_factory=list)

    @property
    def positive_classes(self) -> list[EdgeAdditionClass]:
        return [c for c in self.classes if c.sign > 0]


def classify_edge_additions(g: Graph) -> EdgeAdditionReport:
    """Partition non-edges by isomorphism class of g+e and sign the change.

    One exact mean computation per class.  Class order follows the first
    (lexicographically smallest) representative.
    """
    if not g.simple:
        raise ValueError("classification requires a simple graph")
    if g.n > 24:
        raise ValueError("edge-addition classification capped at 24 vertices")
    base = census(g).mean
    by_cert: dict[bytes, list[tuple[int, int]]] = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                by_cert.setdefault(canonical_form(g.add_edge(u, v)), []).append((u, v))
    report = EdgeAdditionReport(to_graph6(g), base)
    for edges in sorted(by_cert.values()):
        rep = edges[0]
        delta = census(g.add_edge(*rep)).mean - base
        sign = (delta > 0) - (delta < 0)
        report.classes.append(EdgeAdditionClass(rep, edges, delta, sign))
    return report


def check_monotonicity_reversal(k: int, d: int, n: int, w: int) -> CheckVerdict:
    """Build a bridged double broom where a bigger constraint has a smaller mean.

    The small constraint S is the path of order k starting at a hub and
    running along the broom path; the large one is S extended through the
    whole added bridge path to the other hub (order k + d).  ``holds``
    means the reversal mean(G,S) > mean(G,S') is exact at these parameters.
    """
    started = time.perf_counter()
    if d < 1:
        raise ValueError("need d >= 1 (S must grow)")
    if k < 1:
        raise ValueError("need k >= 1")
    g = modified_double_broom(n, w, d - 1)
    hub1, hub2 = w - 1, n - (d - 1) - w
    if k > hub2 - hub1:
        raise ValueError("k exceeds the broom path length")
    s_vertices = list(range(hub1, hub1 + k))
    s_edges = [(i, i + 1) for i in s_vertices[:-1]]
    bridge = list(range(n - (d - 1), n))
    chain = [hub1] + bridge + [hub2]
    s2_vertices = s_vertices + bridge + [hub2]
    s2_edges = s_edges + [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    small = SubtreeConstraint(frozenset(s_vertices), frozenset(s_edges))
    large = SubtreeConstraint(frozenset(s2_vertices), frozenset(s2_edges))
    nc1, rc1 = census_containing(g, small)
    nc2, rc2 = census_containing(g, large)
    mu_small = Fraction(rc1, nc1)
    mu_large = Fraction(rc2, nc2)
    witness = {
        "k": k,
        "d": d,
        "n": n,
        "w": w,
        "mu_small": frac_str(mu_small),
        "mu_large": frac_str(mu_large),
    }
    status = HOLDS if mu_small > mu_large else REPORT
    return CheckVerdict(
        "monotonicity-reversal", to_graph6(g), status, witness, None, _timed(started)
    )


# -- registry for scans ---------------------------------------------------------

CHECKS = {
    "min-path": check_min_path,
    "max-clique": check_max_clique,
    "edge-deletion-exists": check_edge_deletion_exists,
    "edge-addition-exists": check_edge_addition_exists,
    "contraction-gap": check_contraction,
    "local-global": check_local_global,
    "ratio-chain": check_ratio_chain,
    "mean-vs-average": check_mu_vs_av,
    "local-mean-bound": check_local_mean_bound,
    "vertex-share-bound": check_vertex_share_bound,
    "matchings": check_matchings,
}
