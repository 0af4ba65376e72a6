"""
Dissimilarity vectors of a weighted tree
========================================

The m-dissimilarity of a set of m leaves is the total length of the
smallest subtree that connects them.  All arithmetic is exact.
"""

from tropitree import m_dissimilarity, pairwise, parse_newick, to_newick

tree = parse_newick("((1:1,2:1/2):2,(3:1,4:0.25):1,5:3);")
print(to_newick(tree))

# pairwise distances are the m = 2 case
for pair, d in pairwise(tree).items():
    print(pair, d)

# triples: the hull of {1, 2, 3} uses five edges
d3 = m_dissimilarity(tree, 3)
print("d(1,2,3) =", d3[1, 2, 3])
print("d(1,2,5) =", d3[1, 2, 5])

# with m = n there is one entry, the total tree length
print(m_dissimilarity(tree, 5)[1, 2, 3, 4, 5], tree.total_length)
