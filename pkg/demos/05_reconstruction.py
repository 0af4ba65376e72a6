"""
Recovering a tree from its distances
====================================

Neighbor joining in exact rational arithmetic gives back a tree metric
exactly.  On a vector that is not a tree metric the result is a
best-effort tree and the residual measures the mismatch.
"""

from tropitree import (DissimilarityVector, neighbor_joining, pairwise, random_tree, subsets,
                       to_newick, tree_isomorphic)

tree = random_tree(9, seed=5)
rec = neighbor_joining(pairwise(tree))
print(to_newick(tree))
print(to_newick(rec.tree))
report = tree_isomorphic(rec.tree, tree)
print(report.isomorphic, report.length_match, rec.residual)

entries = {s: 1 for s in subsets(4, 2)}
entries[1, 2] = entries[3, 4] = 10
rec = neighbor_joining(DissimilarityVector(4, 2, entries))
print("not a tree metric, residual", rec.residual)
