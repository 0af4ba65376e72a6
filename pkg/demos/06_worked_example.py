"""
The balanced eight-leaf tree
============================

Every edge of the balanced rooted binary tree on leaves 1..8 has length 1.
Consider the relation Z123 Z456 - Z124 Z356 + Z125 Z346 - Z126 Z345.
The triple weights make its monomials weigh 12, 12, 14, 14.  So the
smallest weight is attained twice, and so is the largest.
"""
import json

from tropitree import worked_example

report = worked_example()
print(report["rooted_newick"])
print(report["relation"])
print(json.dumps(report["coordinate_weights"]))
print(report["monomial_weights"])
for convention, cert in report["certificates"].items():
    print(convention, cert["passed"], cert["relations_checked"])
