from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from tropitree.dissimilarity import m_dissimilarity
from tropitree.tree import add_root, convex_hull, random_tree, unroot
from tropitree.weights import (EdgeFunctional, TreeFunctional, WeightLabel, edge_labels,
                               from_metric_tree, pluecker_weight, standard_h,
                               validate_functional, weight_vector)

import oracles

seeds = st.integers(min_value=0, max_value=10_000)


def _edge_to_leaf(rooted, label):
    node = rooted.base.leaf_node(label)
    (_, eid), = rooted.base.neighbors(node)
    return eid


# -- labels -----------------------------------------------------------------------

def test_pendant_edge_of_member_is_dual_first_weight(eight):
    labels = edge_labels(eight, (1, 2, 3), 3)
    for leaf in (1, 2, 3):
        assert labels[_edge_to_leaf(eight, leaf)] == WeightLabel(2, 3)


def test_edge_below_join_is_trivial_top_exterior_power(eight):
    # {1,2,3} all sit above the root edge on the left side
    labels = edge_labels(eight, (1, 2, 3), 3)
    root_edges = [eid for _, eid in eight.base.neighbors(eight.root)]
    left = [eid for eid in root_edges if eight.leaves_above(eid) == {1, 2, 3, 4}]
    assert labels[left[0]].k == 0
    assert labels[left[0]].trivial
    # the label before dualizing counts 3 leaves above; dualized it is omega_0 = trivial
    assert len(eight.leaves_above(left[0]) & {1, 2, 3}) == 3


def test_edge_with_no_members_above_is_trivial(eight):
    labels = edge_labels(eight, (1, 2, 3), 3)
    e = _edge_to_leaf(eight, 8)
    assert labels[e] == WeightLabel(3, 3) and labels[e].trivial


def test_edge_labels_arity(eight):
    with pytest.raises(ValueError):
        edge_labels(eight, (1, 2), 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 8), seeds, st.data())
def test_nontrivial_labels_are_hull(n, seed, data):
    t = random_tree(n, seed, 16)
    rooted = add_root(t, data.draw(st.sampled_from([e.id for e in t.edges])))
    m = data.draw(st.integers(2, n))
    members = data.draw(st.lists(st.integers(1, n), min_size=m, max_size=m, unique=True))
    labels = edge_labels(rooted, members, m)
    nontrivial = {eid for eid, lab in labels.items() if not lab.trivial}
    assert nontrivial == convex_hull(rooted.base, members)
    assert nontrivial == oracles.union_hull(rooted.base, members)


# -- functionals -------------------------------------------------------------------

@pytest.mark.parametrize("m", range(2, 9))
def test_standard_h_valid(m):
    h = standard_h(m)
    assert h.values == (1,) * (m - 1)
    assert validate_functional(h, m)


def test_standard_h_small():
    assert standard_h(3).values == (1, 1)
    assert standard_h(2).values == (1,)
    assert standard_h(3)(WeightLabel(0, 3)) == 0
    assert standard_h(3)(WeightLabel(3, 3)) == 0
    with pytest.raises(ValueError):
        standard_h(1)


def test_invalid_functional():
    # simple root alpha_1 = 2 omega_1 - omega_2 evaluates to 2*1 - 3 = -1
    assert not validate_functional(EdgeFunctional((1, 3)), 3)


@pytest.mark.parametrize("c", [0, Fraction(1, 7), 5])
def test_rank_one_functionals_valid(c):
    assert validate_functional(EdgeFunctional((c,)), 2)


def test_validate_wrong_arity():
    with pytest.raises(ValueError):
        validate_functional(EdgeFunctional((1, 1)), 4)


def test_negative_values_rejected():
    with pytest.raises(ValueError):
        EdgeFunctional((1, -1))


def test_tree_functional_rejects_invalid(eight):
    bad = {e.id: EdgeFunctional((1, 3)) for e in eight.edges}
    with pytest.raises(ValueError):
        TreeFunctional(eight, 3, bad)
    with pytest.raises(ValueError):
        TreeFunctional(eight, 3, {})


# -- weights -----------------------------------------------------------------------

def _unit_functional(rooted, m, scale=1):
    return TreeFunctional.from_lengths(rooted, m, {e.id: scale for e in rooted.edges})


def test_pluecker_weight_eight_leaf(eight):
    tf = _unit_functional(eight, 3)
    assert pluecker_weight(tf, (1, 2, 3)) == 5
    assert pluecker_weight(tf, (1, 2, 5)) == 7
    # the rooted tree has 14 unit edges; hulls computed by the brute-force oracle
    assert oracles.hull_sum(eight.base, (1, 2, 5)) == 7


def test_zero_functional(eight):
    w = weight_vector(_unit_functional(eight, 3, 0))
    assert set(w.values()) == {0}


def test_weight_vector_eight_leaf(eight):
    w = weight_vector(_unit_functional(eight, 3))
    assert len(w) == 56
    assert [w[s] for s in ((1, 2, 3), (4, 5, 6), (1, 2, 4), (3, 5, 6))] == [5, 7, 5, 7]


def test_weight_vector_m_equals_n(eight):
    w = weight_vector(_unit_functional(eight, 8))
    assert len(w) == 1
    assert w[range(1, 9)] == 14


def test_general_functional_sums_labels(eight):
    # value 2 on omega_1 and 1 on omega_2 (valid: 4-1 >= 0 and 2-2 >= 0)
    h = EdgeFunctional((2, 1))
    assert validate_functional(h, 3)
    tf = TreeFunctional(eight, 3, {e.id: h for e in eight.edges})
    labels = edge_labels(eight, (1, 2, 3), 3)
    expected = sum(h(lab) for lab in labels.values())
    # pendant edges carry omega_2 (3 edges, value 1), the cherry-to-parent edge of
    # {1,2} carries omega_1 (two members above, value 2), the {3,4} edge omega_2
    assert expected == 3 * 1 + 2 + 1
    assert pluecker_weight(tf, (1, 2, 3)) == expected


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 8), seeds)
def test_realization_every_root_edge(n, seed):
    t = random_tree(n, seed, 16)
    for m in range(2, min(n, 5) + 1):
        direct = m_dissimilarity(t, m)
        for e in t.edges:
            w = weight_vector(from_metric_tree(t, m, e.id, Fraction(1, 2)))
            assert w.entries == direct.entries


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 7), seeds, st.data())
def test_root_independence(n, seed, data):
    t = random_tree(n, seed, 16)
    ids = [e.id for e in t.edges]
    m = data.draw(st.integers(2, n))
    a = weight_vector(from_metric_tree(t, m, data.draw(st.sampled_from(ids)),
                                       Fraction(data.draw(st.integers(0, 4)), 4)))
    b = weight_vector(from_metric_tree(t, m, data.draw(st.sampled_from(ids)),
                                       Fraction(data.draw(st.integers(0, 4)), 4)))
    assert a.entries == b.entries


def test_two_root_edges_identical(eight_unrooted):
    a = weight_vector(from_metric_tree(eight_unrooted, 3, 0))
    b = weight_vector(from_metric_tree(eight_unrooted, 3, 12))
    assert a.entries == b.entries
    assert a.source["tree_functional"]["root_edge"] == 0
    assert b.source["tree_functional"]["root_edge"] == 12


def test_zero_length_tree_zero_vector():
    t = random_tree(6, 1, 16).scaled(0)
    assert set(weight_vector(from_metric_tree(t, 3)).values()) == {0}


def test_realization_after_unroot(eight):
    # the rooted worked tree and its unrooted form give the same vector
    tf = _unit_functional(eight, 3)
    assert weight_vector(tf).entries == m_dissimilarity(unroot(eight), 3).entries


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 7), seeds)
def test_additive_in_lengths(n, seed):
    rooted = add_root(random_tree(n, seed, 16), 0)
    d = {e.id: e.length for e in rooted.edges}
    d2 = {e.id: Fraction(k + 1, 3) for k, e in enumerate(rooted.edges)}
    for m in range(2, n + 1):
        wa = weight_vector(TreeFunctional.from_lengths(rooted, m, d))
        wb = weight_vector(TreeFunctional.from_lengths(rooted, m, d2))
        wab = weight_vector(TreeFunctional.from_lengths(rooted, m, {k: d[k] + d2[k] for k in d}))
        for s in combinations(range(1, n + 1), m):
            assert wab[s] == wa[s] + wb[s]
        summed = TreeFunctional.from_lengths(rooted, m, d) + TreeFunctional.from_lengths(rooted, m, d2)
        assert weight_vector(summed).entries == wab.entries
