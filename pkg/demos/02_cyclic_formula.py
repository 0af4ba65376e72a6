"""
Triples and larger sets from pairwise distances
===============================================

A subtree spanning m leaves is walked twice by any closed tour through
those leaves in a circular order compatible with the tree.  So half the
shortest tour length recovers the m-dissimilarity from d alone.
"""

from tropitree import m_dissimilarity, m_from_pairwise, pairwise, random_tree

tree = random_tree(7, seed=3)
d2 = pairwise(tree)

for m in (3, 4, 5):
    from_pairs = m_from_pairwise(d2, m)
    direct = m_dissimilarity(tree, m)
    print(m, from_pairs == direct, from_pairs[tuple(range(1, m + 1))])
