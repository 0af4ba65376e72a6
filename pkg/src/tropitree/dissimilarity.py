"""m-dissimilarity vectors of weighted trees.

Two independent routes produce the same vector: summing the edges of each
convex hull directly, and the cyclic-order formula applied to the pairwise
distances alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional

from .tree import WeightedTree, convex_hull
from .vectors import DissimilarityVector, subsets

__all__ = [
    "FourPointCertificate",
    "pairwise",
    "m_dissimilarity",
    "m_from_pairwise",
    "four_point_check",
]


def _check_m(m: int, n: int):
    if not 2 <= m <= n:
        raise ValueError(f"m must satisfy 2 <= m <= n={n}, got {m}")


def pairwise(tree: WeightedTree) -> DissimilarityVector:
    """Leaf-to-leaf path lengths."""
    return m_dissimilarity(tree, 2)


def m_dissimilarity(tree: WeightedTree, m: int) -> DissimilarityVector:
    """Total edge length of the convex hull of every m-subset of leaves."""
    _check_m(m, tree.n)
    entries = {s: tree.length(convex_hull(tree, s)) for s in subsets(tree.n, m)}
    return DissimilarityVector(tree.n, m, entries)


def _cycle_min(d2: DissimilarityVector, members: tuple[int, ...]) -> Fraction:
    first, rest = members[0], members[1:]
    best = None
    for order in permutations(rest):
        cycle = (first,) + order
        total = sum(d2[cycle[k], cycle[(k + 1) % len(cycle)]] for k in range(len(cycle)))
        if best is None or total < best:
            best = total
    return best


def m_from_pairwise(d2: DissimilarityVector, m: int) -> DissimilarityVector:
    """m-dissimilarities from pairwise distances alone.

    Each entry is half the shortest closed tour through the subset, taken
    over the (m-1)! cyclic orders that start at the smallest member.
    """
    if d2.m != 2:
        raise ValueError("m_from_pairwise needs a pairwise (m=2) vector")
    _check_m(m, d2.n)
    entries = {s: Fraction(_cycle_min(d2, s), 2) for s in subsets(d2.n, m)}
    return DissimilarityVector(d2.n, m, entries)


@dataclass(frozen=True)
class FourPointCertificate:
    passed: bool
    # (i, j, k, l) and the sums (d_ij + d_kl, d_ik + d_jl, d_il + d_jk)
    witness: Optional[tuple[tuple[int, int, int, int], tuple[Fraction, Fraction, Fraction]]] = None


def four_point_check(d2) -> FourPointCertificate:
    """For every quadruple the largest of the three pairings must occur twice.

    Accepts any pairwise :class:`~tropitree.vectors.SubsetVector`; the first
    failing quadruple in lexicographic order is reported.
    """
    if d2.m != 2:
        raise ValueError("four_point_check needs a pairwise (m=2) vector")
    for i, j, k, l in combinations(range(1, d2.n + 1), 4):
        sums = (d2[i, j] + d2[k, l], d2[i, k] + d2[j, l], d2[i, l] + d2[j, k])
        if sums.count(max(sums)) < 2:
            return FourPointCertificate(False, ((i, j, k, l), sums))
    return FourPointCertificate(True)
