"""Exact m-dissimilarity vectors of weighted trees and tropical Plücker checks."""
from .dissimilarity import FourPointCertificate, four_point_check, m_dissimilarity, m_from_pairwise, pairwise
from .pipeline import InconsistencyError, certify_tree, random_suite, worked_example
from .pluecker import (QuadMonomial, QuadraticRelation, RelationResult, TropicalCertificate, check_all,
                       exchange_relations, three_term_relations, tropical_check)
from .reconstruct import IsomorphismReport, Reconstruction, canonicalize, neighbor_joining, tree_isomorphic
from .tree import (Edge, NewickError, RootedTree, TreeError, WeightedTree, add_root, balanced_binary_tree,
                   convex_hull, hull_length, leaf_path, parse_newick, parse_rooted_newick, random_tree,
                   root_at, to_newick, unroot)
from .vectors import DissimilarityVector, SubsetVector, WeightVector, subsets
from .weights import (EdgeFunctional, TreeFunctional, WeightLabel, edge_labels, from_metric_tree,
                      pluecker_weight, standard_h, validate_functional, weight_vector)

__version__ = "0.1.0"
