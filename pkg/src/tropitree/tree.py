"""Leaf-labelled weighted trees with exact rational edge lengths.

Trees are immutable.  Nodes are integers, edges carry an integer id that is
stable under rooting, and leaves are labelled ``1..n``.  Newick is the
interchange format; lengths are parsed into :class:`fractions.Fraction`
without any floating point round trip.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

__all__ = [
    "Edge",
    "WeightedTree",
    "RootedTree",
    "TreeError",
    "NewickError",
    "parse_newick",
    "parse_rooted_newick",
    "to_newick",
    "format_length",
    "leaf_path",
    "convex_hull",
    "hull_length",
    "add_root",
    "root_at",
    "unroot",
    "random_tree",
    "balanced_binary_tree",
]


class TreeError(ValueError):
    """Raised for structurally invalid trees or unknown leaf labels."""


class NewickError(ValueError):
    """Malformed Newick text; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    length: Fraction
    # id of the edge this one was split from by add_root, if any
    origin: Optional[int] = None

    def other(self, node: int) -> int:
        if node == self.u:
            return self.v
        if node == self.v:
            return self.u
        raise TreeError(f"node {node} is not an endpoint of edge {self.id}")


def _orient(adjacency, root):
    """Iterative DFS from ``root``; returns (preorder, parent, parent_edge)."""
    parent = {root: None}
    parent_edge = {}
    order = [root]
    stack = [root]
    while stack:
        node = stack.pop()
        for nbr, eid in adjacency[node]:
            if nbr == parent[node] and parent_edge.get(node) == eid:
                continue
            if nbr in parent:
                raise TreeError("tree contains a cycle")
            parent[nbr] = node
            parent_edge[nbr] = eid
            order.append(nbr)
            stack.append(nbr)
    return order, parent, parent_edge


class WeightedTree:
    """An unrooted leaf-labelled tree with nonnegative rational edge lengths.

    Internal vertices may have any degree, including 2.  Every degree-1
    vertex must carry a leaf label and the labels must be exactly ``1..n``.
    """

    def __init__(self, edges: Iterable[Edge], leaves: Mapping[int, int]):
        edges = tuple(sorted(edges, key=lambda e: e.id))
        leaves = dict(sorted(leaves.items()))
        self._edges = {e.id: e for e in edges}
        if len(self._edges) != len(edges):
            raise TreeError("duplicate edge id")
        self._leaves = leaves
        self._label_of = {node: label for label, node in leaves.items()}
        if len(self._label_of) != len(leaves):
            raise TreeError("two labels assigned to the same node")

        n = len(leaves)
        if n < 2:
            raise TreeError("a tree needs at least two leaves")
        if sorted(leaves) != list(range(1, n + 1)):
            raise TreeError(f"leaf labels must be exactly 1..{n}, got {sorted(leaves)}")

        adjacency: dict[int, list] = {}
        for e in edges:
            if not isinstance(e.length, Fraction):
                raise TreeError(f"edge {e.id} length must be a Fraction")
            if e.length < 0:
                raise TreeError(f"edge {e.id} has negative length {e.length}")
            if e.u == e.v:
                raise TreeError(f"edge {e.id} is a loop")
            adjacency.setdefault(e.u, []).append((e.v, e.id))
            adjacency.setdefault(e.v, []).append((e.u, e.id))
        for node in leaves.values():
            if node not in adjacency:
                raise TreeError(f"leaf node {node} is not on any edge")
        self._adj = {node: tuple(sorted(nbrs)) for node, nbrs in sorted(adjacency.items())}
        if len(edges) != len(self._adj) - 1:
            raise TreeError("a tree must have exactly |nodes| - 1 edges")
        for node, nbrs in self._adj.items():
            if len(nbrs) == 1 and node not in self._label_of:
                raise TreeError(f"degree-1 node {node} has no leaf label")
            if node in self._label_of and len(nbrs) != 1:
                raise TreeError(f"leaf {self._label_of[node]} has degree {len(nbrs)}")

        start = leaves[1]
        order, parent, parent_edge = _orient(self._adj, start)
        if len(order) != len(self._adj):
            raise TreeError("tree is not connected")
        # Leaf labels on the side of each edge away from leaf 1.
        below: dict[int, frozenset] = {}
        side: dict[int, frozenset] = {}
        for node in reversed(order):
            acc = {self._label_of[node]} if node in self._label_of and node != start else set()
            for nbr, eid in self._adj[node]:
                if parent.get(nbr) == node and parent_edge[nbr] == eid:
                    acc |= below[nbr]
            below[node] = frozenset(acc)
            if node != start:
                side[parent_edge[node]] = below[node]
        self._side = side

    # -- accessors ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._leaves)

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self._edges.values())

    @property
    def leaves(self) -> dict[int, int]:
        """Mapping leaf label -> node."""
        return dict(self._leaves)

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._edges[edge_id]
        except KeyError:
            raise TreeError(f"no edge with id {edge_id}") from None

    def leaf_node(self, label: int) -> int:
        try:
            return self._leaves[label]
        except KeyError:
            raise TreeError(f"unknown leaf label {label!r}") from None

    def label_of(self, node: int) -> Optional[int]:
        return self._label_of.get(node)

    def is_leaf(self, node: int) -> bool:
        return node in self._label_of

    def neighbors(self, node: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, edge_id)`` pairs around ``node``."""
        return self._adj[node]

    def degree(self, node: int) -> int:
        return len(self._adj[node])

    def split(self, edge_id: int) -> frozenset:
        """Leaf labels on the side of the edge not containing leaf 1."""
        self.edge(edge_id)
        return self._side[edge_id]

    def length(self, edge_ids: Iterable[int]) -> Fraction:
        return sum((self._edges[e].length for e in edge_ids), Fraction(0))

    @property
    def total_length(self) -> Fraction:
        return self.length(self._edges)

    def scaled(self, factor) -> "WeightedTree":
        factor = Fraction(factor)
        if factor < 0:
            raise TreeError("scale factor must be nonnegative")
        edges = [Edge(e.id, e.u, e.v, e.length * factor, e.origin) for e in self.edges]
        return WeightedTree(edges, self._leaves)

    def __eq__(self, other):
        if not isinstance(other, WeightedTree):
            return NotImplemented
        return self._leaves == other._leaves and self._edges == other._edges

    def __hash__(self):
        return hash((tuple(self._leaves.items()), tuple(self._edges.values())))

    def __repr__(self):
        return f"WeightedTree({to_newick(self)!r})"


class RootedTree:
    """A :class:`WeightedTree` with a distinguished non-leaf root.

    Edges are oriented away from the root; the leaves "above" an edge are
    those reachable from it without passing back through the root.
    """

    def __init__(self, base: WeightedTree, root: int):
        if root not in base._adj:
            raise TreeError(f"root {root} is not a node of the tree")
        if base.is_leaf(root):
            raise TreeError("the root must not be a leaf")
        self.base = base
        self.root = root
        order, parent, parent_edge = _orient(base._adj, root)
        self.parent: dict[int, int] = {v: p for v, p in parent.items() if p is not None}
        self._child = {eid: node for node, eid in parent_edge.items()}
        above: dict[int, frozenset] = {}
        for node in reversed(order):
            acc = {base.label_of(node)} if base.is_leaf(node) else set()
            for nbr, _ in base.neighbors(node):
                if parent.get(nbr) == node:
                    acc |= above[nbr]
            above[node] = frozenset(acc)
        self._above = {eid: above[node] for eid, node in self._child.items()}

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.base.edges

    def child(self, edge_id: int) -> int:
        """The endpoint of the edge farther from the root."""
        return self._child[edge_id]

    def leaves_above(self, edge_id: int) -> frozenset:
        return self._above[edge_id]

    def __eq__(self, other):
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self.root == other.root and self.base == other.base

    def __hash__(self):
        return hash((self.base, self.root))

    def __repr__(self):
        return f"RootedTree({to_newick(self)!r})"


# -- Newick ---------------------------------------------------------------

_DELIMS = set("(),:;")


class _NewickParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.edges: list[Edge] = []
        self.leaves: dict[int, int] = {}
        self.next_node = 0

    def error(self, message, pos=None):
        raise NewickError(message, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def token(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while (self.pos < len(self.text) and self.text[self.pos] not in _DELIMS
               and not self.text[self.pos].isspace()):
            self.pos += 1
        return self.text[start:self.pos], start

    def new_node(self) -> int:
        self.next_node += 1
        return self.next_node

    def label(self, name: str, pos: int) -> int:
        if not name.isdigit() or name.startswith("0"):
            self.error(f"leaf name {name!r} is not a positive decimal integer", pos)
        label = int(name)
        if label in self.leaves:
            self.error(f"duplicate leaf name {label}", pos)
        return label

    def length(self) -> Fraction:
        self.expect(":")
        text, pos = self.token()
        if not text:
            self.error("missing branch length", pos)
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError):
            self.error(f"invalid branch length {text!r}", pos)
        if value < 0:
            self.error(f"negative branch length {text}", pos)
        return value

    def clade(self) -> tuple[int, list, str, int]:
        """Parse one clade; returns (node, [(child, length)], name, name position)."""
        node = self.new_node()
        children = []
        if self.peek() == "(":
            self.pos += 1
            while True:
                child, _, name, pos = sub = self.clade()
                if not sub[1]:
                    if not name:
                        self.error("leaf without a name", pos)
                    self.leaves[self.label(name, pos)] = child
                if self.peek() != ":":
                    self.error("branch length is mandatory on every edge")
                children.append((child, self.length()))
                ch = self.peek()
                if ch == ",":
                    self.pos += 1
                elif ch == ")":
                    self.pos += 1
                    break
                else:
                    self.error("unbalanced parenthesis" if not ch else f"unexpected {ch!r}")
        name, pos = self.token()
        for child, length in children:
            self.edges.append(Edge(len(self.edges), node, child, length))
        return node, children, name, pos

    def parse(self) -> tuple[WeightedTree, int]:
        root, children, name, pos = self.clade()
        if self.peek() == ":":
            at = self.pos
            if self.length() != 0:
                self.error("root branch length must be absent or zero", at)
        self.expect(";")
        if self.peek():
            self.error("trailing text after ';'")
        if not children:
            self.error("a tree needs at least two leaves", 0)
        if len(children) == 1:
            # a root with one child is a leaf in its own right
            if not name:
                self.error("root of degree 1 must be named with a leaf label", pos)
            self.leaves[self.label(name, pos)] = root
        n = len(self.leaves)
        missing = sorted(set(range(1, n + 1)) - set(self.leaves))
        if missing:
            self.error(f"leaf names must be 1..{n}; missing {missing}", 0)
        try:
            return WeightedTree(self.edges, self.leaves), root
        except TreeError as exc:
            raise NewickError(str(exc), 0) from None


def parse_newick(text: str) -> WeightedTree:
    """Parse a Newick string whose leaves are named ``1..n``.

    Every edge needs a branch length; decimals, integers and ``p/q`` are
    read exactly.  Internal node names are ignored.

    >>> parse_newick("(1:0.5,2:0.25);").edges[0].length
    Fraction(1, 2)
    """
    return _NewickParser(text).parse()[0]


def parse_rooted_newick(text: str) -> RootedTree:
    """Parse Newick and root the result at the Newick root node."""
    tree, root = _NewickParser(text).parse()
    return RootedTree(tree, root)


def format_length(value: Fraction) -> str:
    """Exact decimal when the denominator is 2^a 5^b, else ``p/q``."""
    value = Fraction(value)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(value.numerator)
    scaled = abs(value.numerator) * 10**digits // value.denominator
    sign = "-" if value < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def to_newick(tree: Union[WeightedTree, RootedTree]) -> str:
    """Serialize a tree to Newick.

    A :class:`RootedTree` is written from its root.  An unrooted tree is
    written from its lowest-numbered degree-2 node if it has one, otherwise
    from the neighbour of leaf 1, so every vertex keeps its degree and
    :func:`parse_newick` recovers an isomorphic tree.
    """
    if isinstance(tree, RootedTree):
        base, start = tree.base, tree.root
    else:
        base = tree
        degree_two = [v for v in base.nodes if base.degree(v) == 2]
        if degree_two:
            start = degree_two[0]
        else:
            start = base.neighbors(base.leaf_node(1))[0][0]
            if base.is_leaf(start):
                # two leaves joined by a single edge
                (_, eid), = base.neighbors(start)
                length = format_length(base.edge(eid).length)
                return f"({base.label_of(start)}:{length}){base.label_of(base.leaf_node(1))};"

    def render(node, parent, via):
        if base.is_leaf(node) and parent is not None:
            text = str(base.label_of(node))
        else:
            parts = [render(nbr, node, eid) for nbr, eid in base.neighbors(node)
                     if not (nbr == parent and eid == via)]
            text = "(" + ",".join(parts) + ")"
        if parent is None:
            return text
        return f"{text}:{format_length(base.edge(via).length)}"

    return render(start, None, None) + ";"


# -- paths and hulls --------------------------------------------------------

def _labels(tree: WeightedTree, members: Iterable[int]) -> frozenset:
    members = frozenset(members)
    for label in members:
        tree.leaf_node(label)
    return members


def leaf_path(tree: WeightedTree, i: int, j: int) -> frozenset:
    """Edge ids on the unique path between leaves ``i`` and ``j``."""
    return convex_hull(tree, (i, j))


def convex_hull(tree: WeightedTree, subset: Iterable[int]) -> frozenset:
    """Edge ids of the smallest subtree spanning the given leaves.

    An edge is in the hull exactly when removing it leaves members of the
    subset on both sides.
    """
    members = _labels(tree, subset)
    k = len(members)
    hull = []
    for e in tree.edges:
        inside = len(tree._side[e.id] & members)
        if 0 < inside < k:
            hull.append(e.id)
    return frozenset(hull)


def hull_length(tree: WeightedTree, subset: Iterable[int]) -> Fraction:
    return tree.length(convex_hull(tree, subset))


# -- rooting ----------------------------------------------------------------

def root_at(tree: WeightedTree, node: int) -> RootedTree:
    return RootedTree(tree, node)


def add_root(tree: WeightedTree, edge_id: int, fraction=Fraction(1, 2)) -> RootedTree:
    """Subdivide an edge with a new degree-2 root.

    The half next to ``edge.u`` gets ``fraction`` of the length.  Both
    halves remember the original edge id in ``origin``.
    """
    fraction = Fraction(fraction)
    if not 0 <= fraction <= 1:
        raise TreeError(f"rooting fraction {fraction} outside [0, 1]")
    old = tree.edge(edge_id)
    root = max(tree.nodes) + 1
    next_id = max(e.id for e in tree.edges) + 1
    edges = [e for e in tree.edges if e.id != edge_id]
    edges.append(Edge(next_id, old.u, root, old.length * fraction, edge_id))
    edges.append(Edge(next_id + 1, root, old.v, old.length * (1 - fraction), edge_id))
    return RootedTree(WeightedTree(edges, tree.leaves), root)


def unroot(rooted: RootedTree) -> WeightedTree:
    """Suppress a degree-2 root, merging its two edges into one."""
    base, root = rooted.base, rooted.root
    if base.degree(root) != 2:
        raise TreeError(f"root has degree {base.degree(root)}, expected 2")
    (a, ea), (b, eb) = base.neighbors(root)
    first, second = base.edge(ea), base.edge(eb)
    if first.origin is not None and first.origin == second.origin:
        merged_id = first.origin
        # restore the split edge's endpoint order: add_root puts the root at v of the first half
        if first.v != root:
            first, second = second, first
        a, b = first.u, second.v
    else:
        merged_id = min(ea, eb)
    edges = [e for e in base.edges if e.id not in (ea, eb)]
    edges.append(Edge(merged_id, a, b, first.length + second.length))
    return WeightedTree(edges, base.leaves)


# -- generators -------------------------------------------------------------

def random_tree(n: int, seed: int, max_denominator: int = 16) -> WeightedTree:
    """Random trivalent tree by sequential leaf attachment.

    Leaf ``k`` (k >= 4) subdivides a uniformly chosen edge.  Lengths are
    ``p/q`` with ``p, q`` uniform in ``1..max_denominator``.  Deterministic
    in ``seed``.
    """
    if n < 3:
        raise TreeError("random_tree needs n >= 3")
    if max_denominator < 1:
        raise TreeError("max_denominator must be positive")
    rng = random.Random(seed)
    center = n + 1
    links = [(center, 1), (center, 2), (center, 3)]
    next_node = n + 2
    for leaf in range(4, n + 1):
        u, v = links.pop(rng.randrange(len(links)))
        mid = next_node
        next_node += 1
        links += [(u, mid), (mid, v), (mid, leaf)]
    edges = []
    for eid, (u, v) in enumerate(links):
        length = Fraction(rng.randint(1, max_denominator), rng.randint(1, max_denominator))
        edges.append(Edge(eid, u, v, length))
    return WeightedTree(edges, {i: i for i in range(1, n + 1)})


def balanced_binary_tree(depth: int, length=1) -> RootedTree:
    """Complete rooted binary tree with ``2**depth`` leaves labelled left to right.

    With ``depth=3`` this is the eight-leaf tree with cherries
    (1,2), (3,4), (5,6), (7,8); its unrooted form has one edge of length
    ``2 * length`` through the suppressed root.
    """
    if depth < 1:
        raise TreeError("depth must be at least 1")
    length = Fraction(length)
    n = 2**depth
    edges = []
    next_node = n + 1

    def build(level, first_leaf):
        nonlocal next_node
        if level == depth:
            return first_leaf
        node = next_node
        next_node += 1
        half = 2 ** (depth - level - 1)
        for child in (build(level + 1, first_leaf), build(level + 1, first_leaf + half)):
            edges.append(Edge(len(edges), node, child, length))
        return node

    root = build(0, 1)
    return RootedTree(WeightedTree(edges, {i: i for i in range(1, n + 1)}), root)
