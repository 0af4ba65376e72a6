"""End-to-end runs: certify a tree, the eight-leaf worked example, seeded suites."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .dissimilarity import four_point_check, m_dissimilarity, m_from_pairwise, pairwise
from .pluecker import CONVENTIONS, QuadMonomial, QuadraticRelation, check_all, tropical_check
from .reconstruct import neighbor_joining, tree_isomorphic
from .serialize import certificate_to_dict, result_to_dict
from .tree import WeightedTree, balanced_binary_tree, random_tree, to_newick, unroot
from .weights import from_metric_tree, weight_vector

__all__ = [
    "InconsistencyError",
    "certify_tree",
    "tree_corpus",
    "reconstruction_corpus",
    "root_choices",
    "worked_example_relation",
    "worked_example",
    "random_suite",
]


class InconsistencyError(RuntimeError):
    """Two routes to the same vector disagreed.  Always an implementation bug."""


def certify_tree(tree: WeightedTree, m: int, convention: str = "max"):
    """Certify that a tree's m-dissimilarity vector passes every exchange relation.

    The vector is computed three ways (hull sums, the cyclic formula on
    pairwise distances, and a rooted tree functional) and must agree
    exactly before it is checked.  Returns ``(certificate, weight_vector)``.
    """
    direct = m_dissimilarity(tree, m)
    cyclic = m_from_pairwise(pairwise(tree), m)
    w = weight_vector(from_metric_tree(tree, m))
    if cyclic != direct:
        raise InconsistencyError(f"cyclic formula disagrees with hull sums for m={m}")
    if w.entries != direct.entries:
        raise InconsistencyError(f"tree functional disagrees with hull sums for m={m}")
    return check_all(w, convention), w


def tree_corpus(count: int = 50, seed: int = 0, n_min: int = 4, n_max: int = 8,
                max_denominator: int = 16) -> list[WeightedTree]:
    """Seeded trivalent trees cycling through ``n_min..n_max`` leaves."""
    width = n_max - n_min + 1
    return [random_tree(n_min + k % width, seed + k, max_denominator) for k in range(count)]


def reconstruction_corpus(count: int = 50, seed: int = 0) -> list[WeightedTree]:
    return tree_corpus(count, seed, 4, 10)


def root_choices(tree: WeightedTree) -> list[tuple[int, Fraction]]:
    """Three distinct rooting edges (first, middle, last) with varied split points."""
    ids = [e.id for e in tree.edges]
    picks = [ids[0], ids[len(ids) // 2], ids[-1]]
    return list(zip(picks, (Fraction(1, 2), Fraction(1, 3), Fraction(0))))


def worked_example_relation() -> QuadraticRelation:
    """Z123 Z456 - Z124 Z356 + Z125 Z346 - Z126 Z345 in the (3, 8) Plücker algebra."""
    return QuadraticRelation(3, 8, (
        QuadMonomial((1, 2, 3), (4, 5, 6), 1),
        QuadMonomial((1, 2, 4), (3, 5, 6), -1),
        QuadMonomial((1, 2, 5), (3, 4, 6), 1),
        QuadMonomial((1, 2, 6), (3, 4, 5), -1),
    ))


EXPECTED_WORKED_WEIGHTS = (12, 12, 14, 14)


def worked_example() -> dict:
    """The balanced eight-leaf unit tree weighting one (3, 8) Plücker relation.

    Raises :class:`InconsistencyError` unless the monomial weights are
    exactly 12, 12, 14, 14, the relation's optimum is attained twice under
    both conventions, and the full max-convention certificate passes.  The
    min-convention certificate is reported as is: hull sums tie at the
    maximum, not at the minimum, on most other relations.
    """
    rooted = balanced_binary_tree(3)
    tree = unroot(rooted)
    relation = worked_example_relation()
    report = {
        "rooted_newick": to_newick(rooted),
        "unrooted_newick": to_newick(tree),
        "unrooted_edge_lengths": sorted(str(e.length) for e in tree.edges),
        "relation": str(relation),
    }
    certificates = {}
    for convention in CONVENTIONS:
        cert, w = certify_tree(tree, 3, convention)
        certificates[convention] = cert
    results = {c: tropical_check(relation, w, c) for c in CONVENTIONS}
    report["coordinate_weights"] = {
        "".join(map(str, s)): str(w[s])
        for t in relation.monomials for s in (t.left, t.right)
    }
    report["monomial_weights"] = [str(x) for x in results["max"].weights]
    report["relation_results"] = {c: result_to_dict(r) for c, r in results.items()}
    report["certificates"] = {c: certificate_to_dict(cert) for c, cert in certificates.items()}
    report["relation_in_certificates"] = all(
        any(r.relation == relation for r in cert.results) for cert in certificates.values())
    if results["max"].weights != EXPECTED_WORKED_WEIGHTS:
        raise InconsistencyError(
            f"worked example weights {results['max'].weights}, expected {EXPECTED_WORKED_WEIGHTS}")
    if not all(r.passed for r in results.values()):
        raise InconsistencyError("worked example relation optimum attained only once")
    if not certificates["max"].passed:
        raise InconsistencyError("worked example failed max-convention certification")
    if not report["relation_in_certificates"]:
        raise InconsistencyError("worked example relation missing from the exchange relations")
    return report


def random_suite(seed: int = 0, count: int = 50, n_min: int = 4, n_max: int = 8,
                 m_values: Optional[Iterable[int]] = None) -> dict:
    """Seeded property run over a tree corpus.

    Checks the cyclic formula, realization by tree functionals under
    several rootings, max-convention tropical certification, the
    four-point condition and neighbor-joining round trips.  Min-convention
    outcomes are counted under ``"reported"`` and never fail the run.  The
    report is deterministic in its arguments.
    """
    n_min = min(n_min, n_max)
    m_values = sorted(set(m_values)) if m_values is not None else [2, 3, 4]
    counts: dict[str, list[int]] = {}
    failures = []
    reported = {"certification_min": {"checked": 0, "passed": 0}}

    def record(name, ok, detail):
        c = counts.setdefault(name, [0, 0])
        c[0] += 1
        if not ok:
            c[1] += 1
            failures.append({"property": name, **detail})

    for k, tree in enumerate(tree_corpus(count, seed, n_min, n_max)):
        where = {"tree": seed + k, "newick": to_newick(tree)}
        d2 = pairwise(tree)
        record("four_point", four_point_check(d2).passed, where)
        for m in m_values:
            if not 2 <= m <= tree.n:
                continue
            at = {**where, "m": m}
            direct = m_dissimilarity(tree, m)
            record("cyclic_formula", m_from_pairwise(d2, m) == direct, at)
            for edge_id, fraction in root_choices(tree):
                w = weight_vector(from_metric_tree(tree, m, edge_id, fraction))
                record("realization", w.entries == direct.entries,
                       {**at, "root_edge": edge_id, "fraction": str(fraction)})
            record("certification_max", check_all(direct, "max").passed, at)
            passed_min = check_all(direct, "min").passed
            reported["certification_min"]["checked"] += 1
            reported["certification_min"]["passed"] += passed_min
        if tree.n >= 3:
            rec = neighbor_joining(d2)
            rep = tree_isomorphic(rec.tree, tree)
            record("reconstruction", rec.exact and rep.isomorphic and rep.length_match, where)

    return {
        "seed": seed,
        "trees": count,
        "n_range": [n_min, n_max],
        "m_values": m_values,
        "properties": {name: {"checked": c, "failed": f} for name, (c, f) in sorted(counts.items())},
        "reported": reported,
        "passed": not failures,
        "failures": failures,
    }
