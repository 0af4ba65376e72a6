"""Recovering a tree from its pairwise distances, and comparing trees."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .dissimilarity import pairwise
from .tree import Edge, WeightedTree
from .vectors import SubsetVector

__all__ = [
    "Reconstruction",
    "IsomorphismReport",
    "neighbor_joining",
    "residual",
    "canonicalize",
    "canonical_string",
    "tree_isomorphic",
]


@dataclass(frozen=True)
class Reconstruction:
    tree: WeightedTree
    # largest |d_ij(tree) - d_ij(input)|
    residual: Fraction
    # number of negative branch lengths that were raised to 0
    clamped: int

    @property
    def exact(self) -> bool:
        return self.residual == 0


def residual(tree: WeightedTree, d2: SubsetVector) -> Fraction:
    got = pairwise(tree)
    return max((abs(got[s] - d2[s]) for s in d2), default=Fraction(0))


def neighbor_joining(d2: SubsetVector) -> Reconstruction:
    """Neighbor joining in exact arithmetic.

    Ties in the Q-criterion go to the lexicographically smallest pair of
    active nodes (leaves in label order, then joined nodes in creation
    order).  On the metric of a trivalent tree with positive lengths the
    result reproduces ``d2`` exactly; otherwise the residual says how far
    off it is.
    """
    if d2.m != 2:
        raise ValueError("neighbor_joining needs a pairwise (m=2) vector")
    n = d2.n
    if n < 3:
        raise ValueError("neighbor_joining needs at least 3 leaves")
    if any(v < 0 for v in d2.values()):
        raise ValueError("distances must be nonnegative")

    dist = {}
    for (i, j), v in d2.items():
        dist[i, j] = dist[j, i] = Fraction(v)
    active = list(range(1, n + 1))
    next_node = n + 1
    links = []
    clamped = 0

    def link(u, v, length):
        nonlocal clamped
        if length < 0:
            clamped += 1
            length = Fraction(0)
        links.append((u, v, length))

    while len(active) > 3:
        r = len(active)
        total = {a: sum(dist[a, b] for b in active if b != a) for a in active}
        best = None
        for x in range(r):
            for y in range(x + 1, r):
                a, b = active[x], active[y]
                q = (r - 2) * dist[a, b] - total[a] - total[b]
                if best is None or q < best[0]:
                    best = (q, a, b)
        _, a, b = best
        la = dist[a, b] / 2 + (total[a] - total[b]) / (2 * (r - 2))
        lb = dist[a, b] - la
        u = next_node
        next_node += 1
        link(u, a, la)
        link(u, b, lb)
        for c in active:
            if c not in (a, b):
                dist[u, c] = dist[c, u] = (dist[a, c] + dist[b, c] - dist[a, b]) / 2
        active = [c for c in active if c not in (a, b)] + [u]

    a, b, c = active
    center = next_node
    link(center, a, (dist[a, b] + dist[a, c] - dist[b, c]) / 2)
    link(center, b, (dist[a, b] + dist[b, c] - dist[a, c]) / 2)
    link(center, c, (dist[a, c] + dist[b, c] - dist[a, b]) / 2)

    edges = [Edge(k, u, v, length) for k, (u, v, length) in enumerate(links)]
    tree = WeightedTree(edges, {i: i for i in range(1, n + 1)})
    return Reconstruction(tree, residual(tree, d2), clamped)


# -- canonical forms ----------------------------------------------------------

def _suppress_degree_two(tree: WeightedTree):
    """Adjacency ``{node: {nbr: length}}`` with degree-2 nodes merged away."""
    adj: dict[int, dict[int, Fraction]] = {v: {} for v in tree.nodes}
    for e in tree.edges:
        adj[e.u][e.v] = e.length
        adj[e.v][e.u] = e.length
    for v in list(adj):
        if len(adj[v]) == 2 and not tree.is_leaf(v):
            (a, la), (b, lb) = adj[v].items()
            del adj[a][v], adj[b][v], adj[v]
            adj[a][b] = adj[b][a] = la + lb
    return adj


def _canon(tree: WeightedTree):
    """Canonical rooted structure from leaf 1 after suppressing degree-2 nodes.

    Returns (topology key, full key, traversal, adjacency) where traversal
    lists ``(node, parent, length to parent)`` in canonical preorder.
    Siblings are ordered by topology key, which is unique among siblings
    because their leaf sets are disjoint and nonempty.
    """
    adj = _suppress_degree_two(tree)

    def visit(node, parent, length):
        kids = sorted((visit(nbr, node, ln) for nbr, ln in adj[node].items() if nbr != parent),
                      key=lambda k: k[0])
        if tree.is_leaf(node) and parent is not None:
            topo = full = str(tree.label_of(node))
        else:
            topo = "(" + ",".join(k[0] for k in kids) + ")"
            full = "(" + ",".join(f"{k[1]}:{k[2][0][2]}" for k in kids) + ")"
        order = [(node, parent, length)]
        for k in kids:
            order.extend(k[2])
        return topo, full, order

    topo, full, order = visit(tree.leaf_node(1), None, None)
    return topo, full, order, adj


def canonical_string(tree: WeightedTree, lengths: bool = True) -> str:
    topo, full, _, _ = _canon(tree)
    return full if lengths else topo


def canonicalize(tree: WeightedTree) -> WeightedTree:
    """Relabelled copy with degree-2 nodes suppressed.

    Leaf nodes are renumbered to their labels and internal nodes to
    ``n+1, n+2, ...`` in canonical traversal order, so two leaf-labelled
    isomorphic trees with equal lengths canonicalize to equal objects.
    """
    _, _, order, _ = _canon(tree)
    rename = {}
    next_internal = tree.n + 1
    for node, _, _ in order:
        if tree.is_leaf(node):
            rename[node] = tree.label_of(node)
        else:
            rename[node] = next_internal
            next_internal += 1
    edges = [Edge(k, rename[parent], rename[node], length)
             for k, (node, parent, length) in enumerate(order[1:])]
    return WeightedTree(edges, {i: i for i in range(1, tree.n + 1)})


@dataclass(frozen=True)
class IsomorphismReport:
    isomorphic: bool
    length_match: bool
    # node of ``a`` -> node of ``b`` over the degree-2-suppressed trees
    mapping: Optional[dict] = None


def tree_isomorphic(a: WeightedTree, b: WeightedTree) -> IsomorphismReport:
    """Leaf-labelled isomorphism, ignoring degree-2 nodes; lengths compared exactly."""
    if a.n != b.n:
        raise ValueError(f"trees have different leaf sets (1..{a.n} vs 1..{b.n})")
    topo_a, full_a, order_a, _ = _canon(a)
    topo_b, full_b, order_b, _ = _canon(b)
    if topo_a != topo_b:
        return IsomorphismReport(False, False)
    mapping = {u[0]: v[0] for u, v in zip(order_a, order_b)}
    return IsomorphismReport(True, full_a == full_b, mapping)
