"""
Weights from an edge functional
===============================

Root the tree on an edge.  For an m-subset S, each edge gets the label
k = m - (members of S above the edge).  The weight of S sums an edge
functional over those labels.  With the all-ones functional H scaled by
the edge lengths, the weight equals the m-dissimilarity, wherever the
root is placed.
"""
from fractions import Fraction

from tropitree import (EdgeFunctional, add_root, balanced_binary_tree, edge_labels,
                       from_metric_tree, m_dissimilarity, random_tree, validate_functional,
                       weight_vector)

rooted = balanced_binary_tree(3)
labels = edge_labels(rooted, (1, 2, 3), 3)
print(sorted(lab.k for lab in labels.values()))

# a functional must be nonnegative on the simple roots
print(validate_functional(EdgeFunctional((1, 1)), 3))   # H
print(validate_functional(EdgeFunctional((1, 3)), 3))   # fails: 2*1 - 3 < 0

tree = random_tree(6, seed=8)
direct = m_dissimilarity(tree, 3)
for edge in tree.edges[:3]:
    w = weight_vector(from_metric_tree(tree, 3, edge.id, Fraction(1, 3)))
    print(edge.id, w.entries == direct.entries)

# the rooted tree itself is an ordinary weighted tree with one degree-2 node
rooted = add_root(tree, 0)
print(rooted.base.degree(rooted.root))
