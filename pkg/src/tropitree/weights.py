"""Tree functionals: weighting Plücker coordinates through a rooted tree.

For a Plücker coordinate ``Z_S`` on a rooted tree, an edge with ``n_e``
members of ``S`` above it carries the fundamental weight ``omega_{m - n_e}``
(``k = 0`` and ``k = m`` are the trivial representation).  Each edge has a
functional on fundamental weights, and the weight of ``Z_S`` is the sum of
the edge functionals at their labels.  With ``d_e`` times the all-ones
functional on every edge this reproduces hull lengths.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .tree import RootedTree, WeightedTree, add_root
from .vectors import WeightVector, check_subset, subsets

__all__ = [
    "WeightLabel",
    "EdgeFunctional",
    "TreeFunctional",
    "edge_labels",
    "validate_functional",
    "standard_h",
    "pluecker_weight",
    "weight_vector",
    "from_metric_tree",
]


@dataclass(frozen=True)
class WeightLabel:
    """``omega_k`` for SL_m; ``k`` in ``{0, m}`` is the trivial representation."""

    k: int
    m: int

    def __post_init__(self):
        if not 0 <= self.k <= self.m:
            raise ValueError(f"label index {self.k} outside 0..{self.m}")

    @property
    def trivial(self) -> bool:
        return self.k in (0, self.m)


@dataclass(frozen=True)
class EdgeFunctional:
    """Values ``(h(omega_1), ..., h(omega_{m-1}))``; trivial labels map to 0."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.values)
        if any(v < 0 for v in values):
            raise ValueError("edge functional values must be nonnegative")
        object.__setattr__(self, "values", values)

    @property
    def m(self) -> int:
        return len(self.values) + 1

    def __call__(self, label: WeightLabel) -> Fraction:
        if label.m != self.m:
            raise ValueError(f"label for SL_{label.m} given to a functional for SL_{self.m}")
        return Fraction(0) if label.trivial else self.values[label.k - 1]

    def __mul__(self, factor) -> "EdgeFunctional":
        factor = Fraction(factor)
        return EdgeFunctional(tuple(v * factor for v in self.values))

    __rmul__ = __mul__

    def __add__(self, other: "EdgeFunctional") -> "EdgeFunctional":
        if other.m != self.m:
            raise ValueError("cannot add functionals of different rank")
        return EdgeFunctional(tuple(a + b for a, b in zip(self.values, other.values)))


def validate_functional(h: EdgeFunctional, m: int) -> bool:
    """Whether ``h`` is nonnegative on the positive roots of SL_m.

    Checking the simple roots ``2 omega_k - omega_{k-1} - omega_{k+1}`` is
    enough, since every positive root is a nonnegative sum of them.
    """
    if len(h.values) != m - 1:
        raise ValueError(f"functional has {len(h.values)} values, SL_{m} needs {m - 1}")
    padded = (Fraction(0),) + h.values + (Fraction(0),)
    return all(2 * padded[k] - padded[k - 1] - padded[k + 1] >= 0 for k in range(1, m))


def standard_h(m: int) -> EdgeFunctional:
    """The functional sending every fundamental weight to 1."""
    if m < 2:
        raise ValueError("standard_h needs m >= 2")
    return EdgeFunctional((Fraction(1),) * (m - 1))


def edge_labels(rooted: RootedTree, subset: Iterable[int], m: int) -> dict[int, WeightLabel]:
    """Label of every edge for the Plücker coordinate of ``subset``."""
    members = frozenset(check_subset(subset, rooted.n, m))
    return {e.id: WeightLabel(m - len(rooted.leaves_above(e.id) & members), m)
            for e in rooted.edges}


class TreeFunctional:
    """A rooted tree with an :class:`EdgeFunctional` on every edge."""

    def __init__(self, tree: RootedTree, m: int, per_edge: Mapping[int, EdgeFunctional],
                 source: Optional[dict] = None):
        if not 2 <= m <= tree.n:
            raise ValueError(f"m must satisfy 2 <= m <= n={tree.n}, got {m}")
        ids = {e.id for e in tree.edges}
        if set(per_edge) != ids:
            raise ValueError("every edge needs exactly one functional")
        for eid, h in per_edge.items():
            if not validate_functional(h, m):
                raise ValueError(f"functional on edge {eid} is negative on a positive root")
        self.tree = tree
        self.m = m
        self.per_edge = dict(per_edge)
        self.source = source

    @classmethod
    def from_lengths(cls, tree: RootedTree, m: int, lengths: Mapping[int, object],
                     source: Optional[dict] = None) -> "TreeFunctional":
        """``d_e`` times :func:`standard_h` on every edge."""
        h = standard_h(m)
        return cls(tree, m, {eid: Fraction(d) * h for eid, d in lengths.items()}, source)

    def __add__(self, other: "TreeFunctional") -> "TreeFunctional":
        if other.tree != self.tree or other.m != self.m:
            raise ValueError("functionals live on different trees")
        return TreeFunctional(self.tree, self.m,
                              {e: self.per_edge[e] + other.per_edge[e] for e in self.per_edge})


def pluecker_weight(tf: TreeFunctional, subset: Iterable[int]) -> Fraction:
    labels = edge_labels(tf.tree, subset, tf.m)
    return sum((tf.per_edge[eid](label) for eid, label in labels.items()), Fraction(0))


def weight_vector(tf: TreeFunctional) -> WeightVector:
    entries = {s: pluecker_weight(tf, s) for s in subsets(tf.tree.n, tf.m)}
    return WeightVector(tf.tree.n, tf.m, entries, source=tf.source)


def from_metric_tree(tree: WeightedTree, m: int, root_edge: Optional[int] = None,
                     fraction=Fraction(1, 2)) -> TreeFunctional:
    """Root a metric tree on an edge and weight each edge by its length.

    ``root_edge`` defaults to the lowest edge id.  The weight vector of the
    result equals ``m_dissimilarity(tree, m)`` for any choice of root.
    """
    if root_edge is None:
        root_edge = tree.edges[0].id
    fraction = Fraction(fraction)
    rooted = add_root(tree, root_edge, fraction)
    source = {"tree_functional": {"root_edge": root_edge, "fraction": str(fraction),
                                  "functional": "H"}}
    return TreeFunctional.from_lengths(rooted, m, {e.id: e.length for e in rooted.edges}, source)
