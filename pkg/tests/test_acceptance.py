"""Acceptance criteria, one test each.

Every test appends a ``[criterion N] PASS/FAIL`` line to the shared log,
which the terminal summary prints at the end of the run.
"""
import time
from contextlib import contextmanager

from tropitree.dissimilarity import four_point_check, m_dissimilarity, m_from_pairwise, pairwise
from tropitree.pipeline import (EXPECTED_WORKED_WEIGHTS, reconstruction_corpus, root_choices,
                                tree_corpus, worked_example_relation)
from tropitree.pluecker import check_all, exchange_relations, tropical_check
from tropitree.reconstruct import neighbor_joining, tree_isomorphic
from tropitree.serialize import vector_from_json, vector_from_tsv, vector_to_json, vector_to_tsv
from tropitree.tree import balanced_binary_tree, parse_newick, to_newick, unroot
from tropitree.vectors import DissimilarityVector
from tropitree.weights import from_metric_tree, weight_vector

import oracles

CORPUS = tree_corpus(50, 0, 4, 8)


@contextmanager
def criterion(log, number, title, budget=None):
    """Time the block and log one pass/fail line for it."""
    start = time.perf_counter()
    state = {"detail": ""}
    ok = False
    try:
        yield state
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed >= budget:
            ok = False
            state["detail"] += f" over budget ({budget} s)"
        verdict = "PASS" if ok else "FAIL"
        log.append(f"[criterion {number}] {verdict} {title}: {elapsed:.2f} s{state['detail']}")
    if budget is not None:
        assert elapsed < budget, f"criterion {number} took {elapsed:.2f} s, budget {budget} s"


def test_criterion_1_worked_example(acceptance_log):
    with criterion(acceptance_log, 1, "eight-leaf worked relation weighs 12,12,14,14", 1.0) as st:
        tree = unroot(balanced_binary_tree(3))
        w = m_dissimilarity(tree, 3)
        relation = worked_example_relation()
        assert str(relation) == "Z123*Z456 - Z124*Z356 + Z125*Z346 - Z126*Z345"
        for convention in ("min", "max"):
            res = tropical_check(relation, w, convention)
            assert res.weights == EXPECTED_WORKED_WEIGHTS
            assert len(res.achievers) >= 2
        st["detail"] = ", optimum attained twice under min (12) and max (14)"


def test_criterion_2_cyclic_formula(acceptance_log):
    with criterion(acceptance_log, 2, "cyclic formula equals hull sums", 30.0) as st:
        checked = 0
        for tree in CORPUS:
            d2 = pairwise(tree)
            for m in (3, 4, 5):
                if m <= tree.n:
                    assert m_from_pairwise(d2, m) == m_dissimilarity(tree, m)
                    checked += 1
        st["detail"] = f", {checked} (tree, m) pairs"


def test_criterion_3_tropical_certification(acceptance_log):
    with criterion(acceptance_log, 3, "tree vectors satisfy every exchange relation (max)",
                   60.0) as st:
        relations = 0
        min_passed = min_checked = 0
        for tree in CORPUS:
            for m in (2, 3, 4):
                if m > tree.n:
                    continue
                w = m_dissimilarity(tree, m)
                cert = check_all(w, "max")
                assert cert.passed, f"{to_newick(tree)} m={m}: {cert.failures[0].relation}"
                relations += len(cert.results)
                min_checked += 1
                min_passed += check_all(w, "min").passed
        st["detail"] = (f", {relations} relations checked; min convention reported:"
                        f" {min_passed}/{min_checked} certificates pass")


def test_criterion_4_realization(acceptance_log):
    with criterion(acceptance_log, 4, "tree functionals realize the dissimilarity vectors",
                   30.0) as st:
        checked = 0
        for tree in CORPUS:
            choices = root_choices(tree)
            assert len({e for e, _ in choices}) >= 3
            for m in range(2, min(5, tree.n) + 1):
                direct = m_dissimilarity(tree, m)
                for edge_id, fraction in choices:
                    w = weight_vector(from_metric_tree(tree, m, edge_id, fraction))
                    assert w.entries == direct.entries
                    checked += 1
        st["detail"] = f", {checked} (tree, m, root) triples"


def _perturbed(d2):
    """Raise d12 so the split 12|34 has the unique largest quartet sum."""
    entries = d2.entries
    entries[1, 2] += 1 + 4 * max(d2.values())
    return DissimilarityVector(d2.n, 2, entries)


def test_criterion_5_four_point_agreement(acceptance_log):
    with criterion(acceptance_log, 5, "m=2 certification agrees with the four-point check") as st:
        passing = [pairwise(t) for t in tree_corpus(100, 1000, 4, 8)]
        failing = [_perturbed(d) for d in passing]
        agree = 0
        for vec, expected in [(v, True) for v in passing] + [(v, False) for v in failing]:
            fp = four_point_check(vec).passed
            tc = check_all(vec, "max").passed
            assert fp == expected
            agree += fp == tc
        assert agree == 200
        st["detail"] = f", {agree}/200 agree (100 tree-derived, 100 perturbed)"


SHAPES = [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (3, 7), (4, 6), (4, 8)]


def test_criterion_6_relation_soundness(acceptance_log):
    with criterion(acceptance_log, 6, "exchange relations vanish on maximal minors") as st:
        evaluations = 0
        for m, n in SHAPES:
            relations = exchange_relations(m, n)
            assert relations
            for seed in range(20):
                coords = oracles.maximal_minors(oracles.random_matrix(m, n, seed))
                for rel in relations:
                    assert rel.evaluate(coords) == 0, f"({m},{n}) seed {seed}: {rel}"
                    evaluations += 1
        st["detail"] = f", {evaluations} evaluations over {len(SHAPES)} shapes"


def test_criterion_7_reconstruction(acceptance_log):
    with criterion(acceptance_log, 7, "neighbor joining recovers the tree exactly") as st:
        corpus = reconstruction_corpus(50, 0)
        assert {t.n for t in corpus} == set(range(4, 11))
        for tree in corpus:
            rec = neighbor_joining(pairwise(tree))
            rep = tree_isomorphic(rec.tree, tree)
            assert rec.exact and rec.clamped == 0
            assert rep.isomorphic and rep.length_match, to_newick(tree)
        st["detail"] = f", {len(corpus)} trees with n in 4..10"


def test_criterion_8_format_round_trips(acceptance_log):
    with criterion(acceptance_log, 8, "Newick and JSON/TSV vector round trips are exact") as st:
        vectors = 0
        for tree in CORPUS:
            text = to_newick(tree)
            again = parse_newick(text)
            assert to_newick(again) == text
            rep = tree_isomorphic(again, tree)
            assert rep.isomorphic and rep.length_match
            # once parsed, the node numbering is a fixed point too
            assert parse_newick(to_newick(again)) == again
            for m in range(2, tree.n + 1):
                vec = m_dissimilarity(tree, m)
                assert vector_from_json(vector_to_json(vec)) == vec
                assert vector_from_tsv(vector_to_tsv(vec)) == vec
                vectors += 1
        st["detail"] = f", {len(CORPUS)} trees, {vectors} vectors"
