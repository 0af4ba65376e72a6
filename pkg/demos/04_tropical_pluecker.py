"""
Tropical Plücker checks
=======================

Each quadratic exchange relation among the Plücker coordinates becomes
a tropical condition.  Give each monomial Z_I Z_J the weight w(I) + w(J).
The vector passes a relation if the best weight is attained at least
twice.
"""

from tropitree import (DissimilarityVector, check_all, exchange_relations, four_point_check, m_dissimilarity,
                       pairwise, random_tree, tropical_check)

print(len(exchange_relations(2, 5)), "relations for (2, 5)")
print(len(exchange_relations(3, 6)), "relations for (3, 6)")
rel = exchange_relations(3, 6)[0]
print(rel)

tree = random_tree(6, seed=1)
w = m_dissimilarity(tree, 3)
res = tropical_check(rel, w, "max")
print(res.weights, res.achievers, res.passed)
print("max:", check_all(w, "max").passed)

# the min convention is a different condition; hull sums tie at the top
cert = check_all(w, "min")
print("min:", cert.passed, len(cert.failures), "of", len(cert.results), "fail")

# for m = 2 the max check is the four-point condition
d2 = pairwise(tree)
print(check_all(d2, "max").passed, four_point_check(d2).passed)
entries = d2.entries
entries[1, 2] += 100
bad = DissimilarityVector(6, 2, entries)
print(check_all(bad, "max").passed, four_point_check(bad))
