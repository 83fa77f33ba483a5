"""Exact subtree statistics of a graph.

A subtree with vertex set A is a spanning tree of the induced subgraph
G[A], so the census enumerates every connected vertex subset exactly once
(recursive extend-or-forbid growth from each root, smaller roots
forbidden) and adds the matrix-tree count of G[A] into the order-|A|
bucket.  All arithmetic is exact: counts are Python integers,
determinants use fraction-free Bareiss elimination, and means are
``Fraction`` values.

:func:`census_by_subtree_enumeration` is an independent slow oracle that
lists subtrees one by one as growing edge sets; it shares no counting
machinery with :func:`census` and exists to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Edge, Graph, _norm_edge


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


# -- determinants ------------------------------------------------------------


def _det_bareiss(mat: list[list[int]]) -> int:
    """Fraction-free integer determinant; destroys ``mat``."""
    size = len(mat)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, size):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        mk = mat[k]
        pivot = mk[k]
        tail = mk[k + 1 :]
        for i in range(k + 1, size):
            mi = mat[i]
            f = mi[k]
            if f:
                mi[k + 1 :] = [
                    (pivot * a - f * b) // prev for a, b in zip(mi[k + 1 :], tail)
                ]
            elif pivot != prev:
                mi[k + 1 :] = [(pivot * a) // prev for a in mi[k + 1 :]]
        prev = pivot
    return sign * mat[size - 1][size - 1]


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees (any Laplacian cofactor), exact.

    Multiplicities contribute; disconnected graphs give 0 and a single
    vertex gives 1.
    """
    n = g.n
    if n == 1:
        return 1
    mat = []
    full = (1 << n) - 1
    for i in range(1, n):
        row_mask = g.rows[i]
        if g.mult is None:
            deg = (row_mask & full).bit_count()
            row = [deg if i == j else -((row_mask >> j) & 1) for j in range(1, n)]
        else:
            mults = [g.multiplicity(i, j) for j in range(n)]
            deg = sum(mults)
            row = [deg if i == j else -mults[j] for j in range(1, n)]
        mat.append(row)
    return _det_bareiss(mat)


def _kappa_induced(rows: tuple[int, ...], verts: list[int], subset: int) -> int:
    # Spanning trees of the induced subgraph on `verts` (a connected set).
    k = len(verts)
    if k <= 2:
        return 1
    mat = []
    for i in range(1, k):
        row_mask = rows[verts[i]]
        deg = (row_mask & subset).bit_count()
        mat.append(
            [deg if i == j else -((row_mask >> verts[j]) & 1) for j in range(1, k)]
        )
    return _det_bareiss(mat)


# -- census ------------------------------------------------------------------


@dataclass(frozen=True)
class SubtreeCensus:
    """Subtree counts of a graph, bucketed by order.

    ``counts[k]`` is the number of subtrees with exactly k vertices
    (``counts[0]`` is always 0), ``num_subtrees`` their total number and
    ``order_sum`` the sum of their orders.  ``vertex_counts[v]`` /
    ``vertex_order_sums[v]`` restrict both to subtrees containing v.
    """

    counts: tuple[int, ...]
    num_subtrees: int
    order_sum: int
    vertex_counts: tuple[int, ...]
    vertex_order_sums: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def spanning_count(self) -> int:
        return self.counts[self.n]

    @property
    def mean(self) -> Fraction:
        return Fraction(self.order_sum, self.num_subtrees)

    @property
    def spanning_fraction(self) -> Fraction:
        return Fraction(self.spanning_count, self.num_subtrees)

    def mean_at_vertex(self, v: int) -> Fraction:
        return Fraction(self.vertex_order_sums[v], self.vertex_counts[v])


def census(g: Graph) -> SubtreeCensus:
    """Full subtree census; the graph may be disconnected."""
    if not g.simple:
        raise ValueError("census requires a simple graph")
    n = g.n
    rows = g.rows
    counts = [0] * (n + 1)
    vertex_counts = [0] * n
    vertex_order_sums = [0] * n
    all_bits = (1 << n) - 1
    for root in range(n):
        allowed = all_bits & ~((1 << (root + 1)) - 1)
        stack = [(1 << root, rows[root] & allowed, 0)]
        while stack:
            subset, cand, forb = stack.pop()
            verts = _bits(subset)
            k = len(verts)
            twice_edges = 0
            for v in verts:
                twice_edges += (rows[v] & subset).bit_count()
            if twice_edges == 2 * (k - 1):
                kappa = 1
            else:
                kappa = _kappa_induced(rows, verts, subset)
            counts[k] += kappa
            k_kappa = k * kappa
            for v in verts:
                vertex_counts[v] += kappa
                vertex_order_sums[v] += k_kappa
            processed = 0
            while cand:
                b = cand & -cand
                cand ^= b
                grown = subset | b
                nf = forb | processed
                stack.append(
                    (grown, (cand | rows[b.bit_length() - 1]) & allowed & ~grown & ~nf, nf)
                )
                processed |= b
    num = sum(counts)
    total = sum(k * c for k, c in enumerate(counts))
    return SubtreeCensus(
        tuple(counts), num, total, tuple(vertex_counts), tuple(vertex_order_sums)
    )


# -- rooted censuses ----------------------------------------------------------


@dataclass(frozen=True)
class SubtreeConstraint:
    """Vertices and forest edges every counted subtree must contain."""

    vertices: frozenset[int] = frozenset()
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(
            self, "edges", frozenset(_norm_edge(u, v) for u, v in self.edges)
        )
        for u, v in self.edges:
            if u == v:
                raise ValueError("constraint contains a loop")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError("constraint edges must span required vertices")
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            a, b = find(u), find(v)
            if a == b:
                raise ValueError("constraint edges contain a cycle")
            parent[a] = b

    @property
    def empty(self) -> bool:
        return not self.vertices

    def is_tree(self) -> bool:
        return len(self.vertices) >= 1 and len(self.edges) == len(self.vertices) - 1

    def validate_for(self, g: Graph) -> None:
        for v in self.vertices:
            if not 0 <= v < g.n:
                raise ValueError(f"constraint vertex {v} outside graph")
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise ValueError(f"constraint edge ({u},{v}) absent from graph")


def _kappa_contracted(
    rows: tuple[int, ...], subset: int, req_block_masks: list[int], req_mask: int
) -> int:
    # Spanning trees of G[subset] containing the required forest: contract
    # each forest component to a block, keep parallel edges, drop loops.
    blocks = list(req_block_masks)
    free = subset & ~req_mask
    while free:
        b = free & -free
        free ^= b
        blocks.append(b)
    nb = len(blocks)
    if nb == 1:
        return 1
    # per-block edge weight into every other block
    mat = []
    for i in range(1, nb):
        bi = blocks[i]
        outside = subset & ~bi
        wrow = [0] * (nb - 1)
        deg = 0
        m = bi
        while m:
            b = m & -m
            m ^= b
            r = rows[b.bit_length() - 1]
            deg += (r & outside).bit_count()
            for j in range(1, nb):
                if j != i:
                    w = (r & blocks[j]).bit_count()
                    if w:
                        wrow[j - 1] -= w
        wrow[i - 1] = deg
        mat.append(wrow)
    return _det_bareiss(mat)


def census_containing(g: Graph, constraint: SubtreeConstraint) -> tuple[int, int]:
    """Count and total order of subtrees containing the whole constraint.

    The empty constraint means "no restriction" and reproduces the full
    census totals.
    """
    if not g.simple:
        raise ValueError("census_containing requires a simple graph")
    constraint.validate_for(g)
    if constraint.empty:
        c = census(g)
        return c.num_subtrees, c.order_sum

    rows = g.rows
    req_mask = 0
    for v in constraint.vertices:
        req_mask |= 1 << v

    # blocks of the required forest (fixed across subsets)
    parent = {v: v for v in constraint.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in constraint.edges:
        parent[find(u)] = find(v)
    comp_masks: dict[int, int] = {}
    for v in constraint.vertices:
        root = find(v)
        comp_masks[root] = comp_masks.get(root, 0) | (1 << v)
    req_blocks = sorted(comp_masks.values())

    count = 0
    order_sum = 0
    neighbourhood = 0
    for v in constraint.vertices:
        neighbourhood |= rows[v]
    stack = [(req_mask, neighbourhood & ~req_mask, 0)]
    while stack:
        subset, cand, forb = stack.pop()
        low = subset & -subset
        if g.component_mask(low.bit_length() - 1, subset) == subset:
            k = subset.bit_count()
            twice_edges = 0
            m = subset
            while m:
                b = m & -m
                m ^= b
                twice_edges += (rows[b.bit_length() - 1] & subset).bit_count()
            if twice_edges == 2 * (k - 1):
                kappa = 1
            else:
                kappa = _kappa_contracted(rows, subset, req_blocks, req_mask)
            count += kappa
            order_sum += k * kappa
        processed = 0
        while cand:
            b = cand & -cand
            cand ^= b
            grown = subset | b
            nf = forb | processed
            stack.append(
                (grown, (cand | rows[b.bit_length() - 1]) & ~grown & ~nf, nf)
            )
            processed |= b
    return count, order_sum


# -- derived statistics --------------------------------------------------------


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise ValueError("graph must be connected")


def mean_subtree_order(g: Graph) -> Fraction:
    _require_connected(g)
    c = census(g)
    return c.mean


def mean_subtree_order_at_vertex(g: Graph, v: int) -> Fraction:
    _require_connected(g)
    n_c, r_c = census_containing(g, SubtreeConstraint(frozenset([v])))
    return Fraction(r_c, n_c)


def mean_subtree_order_at_edge(g: Graph, e: Edge) -> Fraction:
    _require_connected(g)
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    n_c, r_c = census_containing(
        g, SubtreeConstraint(frozenset([u, v]), frozenset([(u, v)]))
    )
    return Fraction(r_c, n_c)


def mean_subtree_order_at_tree(g: Graph, constraint: SubtreeConstraint) -> Fraction:
    _require_connected(g)
    if not constraint.is_tree():
        raise ValueError("constraint must be a non-empty subtree")
    n_c, r_c = census_containing(g, constraint)
    return Fraction(r_c, n_c)


def spanning_fraction(g: Graph) -> Fraction:
    _require_connected(g)
    return census(g).spanning_fraction


def average_connected_set_size(g: Graph) -> Fraction:
    """Mean cardinality over all non-empty connected vertex sets."""
    _require_connected(g)
    n = g.n
    rows = g.rows
    all_bits = (1 << n) - 1
    sets = 0
    size_sum = 0
    for root in range(n):
        allowed = all_bits & ~((1 << (root + 1)) - 1)
        stack = [(1 << root, 1, rows[root] & allowed, 0)]
        while stack:
            subset, k, cand, forb = stack.pop()
            sets += 1
            size_sum += k
            processed = 0
            while cand:
                b = cand & -cand
                cand ^= b
                grown = subset | b
                nf = forb | processed
                stack.append(
                    (grown, k + 1, (cand | rows[b.bit_length() - 1]) & allowed & ~grown & ~nf, nf)
                )
                processed |= b
    return Fraction(size_sum, sets)


# -- independent oracle ---------------------------------------------------------

ORACLE_MAX_VERTICES = 8


def census_by_subtree_enumeration(g: Graph) -> SubtreeCensus:
    """Slow oracle: list every subtree explicitly as a growing edge set.

    Subtrees are grown from their minimum vertex, adding one frontier edge
    at a time with earlier frontier edges forbidden, so each subtree
    appears exactly once.  Exponential in the subtree count; capped at
    n <= 8.
    """
    if not g.simple:
        raise ValueError("subtree enumeration requires a simple graph")
    n = g.n
    if n > ORACLE_MAX_VERTICES:
        raise ValueError(f"subtree enumeration capped at {ORACLE_MAX_VERTICES} vertices")
    rows = g.rows
    counts = [0] * (n + 1)
    vertex_counts = [0] * n
    vertex_order_sums = [0] * n

    def account(wmask: int) -> None:
        verts = _bits(wmask)
        k = len(verts)
        counts[k] += 1
        for v in verts:
            vertex_counts[v] += 1
            vertex_order_sums[v] += k

    all_bits = (1 << n) - 1
    for root in range(n):
        account(1 << root)
        allowed = all_bits & ~((1 << (root + 1)) - 1)
        start_cand = tuple((root, v) for v in _bits(rows[root] & allowed))
        stack = [(1 << root, start_cand)]
        while stack:
            wmask, cand = stack.pop()
            for i, (_, v) in enumerate(cand):
                grown = wmask | (1 << v)
                nxt = [e for e in cand[i + 1 :] if not (grown >> e[1]) & 1]
                nxt.extend((v, z) for z in _bits(rows[v] & allowed & ~grown))
                account(grown)
                stack.append((grown, tuple(nxt)))
    num = sum(counts)
    total = sum(k * c for k, c in enumerate(counts))
    return SubtreeCensus(
        tuple(counts), num, total, tuple(vertex_counts), tuple(vertex_order_sums)
    )
