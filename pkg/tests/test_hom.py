import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from graphpoly.enumeration import census, sample_gnp
from graphpoly.errors import InputError, SizeCapError
from graphpoly.graph import Multigraph, complete_bipartite, complete_graph, cycle_graph, path_graph
from graphpoly.hom import (
    WeightedTemplate,
    classify_dichotomy,
    format_template,
    parse_template,
    z_a,
    z_a_rank1,
)
from graphpoly.invariants import chromatic
from graphpoly.treedecomp import (
    TreeDecomposition,
    chromatic_fpt,
    count_colorings_dp,
    nice_decomposition,
    tree_decompose,
    validate,
)

from oracles import proper_colorings, z_a_itertools
from test_graph import multigraphs

ONES2 = WeightedTemplate([[1, 1], [1, 1]])


def kq(q):
    return WeightedTemplate.adjacency(complete_graph(q))


def test_z_a_examples():
    assert z_a(complete_graph(3), ONES2) == 8
    assert z_a(cycle_graph(4), kq(2)) == 2
    assert z_a(complete_graph(3), kq(3)) == 6


def test_z_a_cap():
    with pytest.raises(SizeCapError):
        z_a(Multigraph(15), kq(3))


@given(multigraphs(max_n=4, max_m=6), st.lists(st.fractions(0, 3, max_denominator=3), min_size=3, max_size=3))
def test_z_a_vs_itertools(G, w):
    A = [[w[0], w[1]], [w[1], w[2]]]
    assert z_a(G, WeightedTemplate(A)) == z_a_itertools(G, A)


def test_all_ones_counts_maps():
    for k in (1, 2, 3):
        ones = WeightedTemplate([[1] * k for _ in range(k)])
        for G in census(5):
            assert z_a(G, ones) == k ** G.n


def test_homs_to_complete_graphs_are_colorings():
    for q in (2, 3):
        for G in census(5):
            assert z_a(G, kq(q)) == chromatic(G)(x=q)


def test_classifier_examples():
    assert classify_dichotomy(ONES2).verdict == "Tractable"
    r = classify_dichotomy(kq(2))
    assert r.verdict == "Tractable" and r.components[0].bipartite and r.components[0].rank == 2
    r = classify_dichotomy(kq(3))
    assert r.verdict == "SharpPHard" and r.components[0].rank == 3


def test_classifier_more_cases():
    # K_{2,2} adjacency: bipartite, rank 2
    assert classify_dichotomy(WeightedTemplate.adjacency(complete_bipartite(2, 2))).tractable
    # P_4 adjacency: bipartite but rank 4
    assert not classify_dichotomy(WeightedTemplate.adjacency(path_graph(4))).tractable
    # two components, one hard
    A = [[1, 1, 0, 0, 0], [1, 1, 0, 0, 0], [0, 0, 0, 1, 1], [0, 0, 1, 0, 1], [0, 0, 1, 1, 0]]
    r = classify_dichotomy(WeightedTemplate(A))
    assert r.verdict == "SharpPHard"
    assert [c.tractable for c in r.components] == [True, False]
    # a loop makes a component non-bipartite
    r = classify_dichotomy(WeightedTemplate([[1, 1], [1, 0]]))
    assert not r.components[0].bipartite and r.verdict == "SharpPHard"
    # zero template: isolated rank-0 components
    assert classify_dichotomy(WeightedTemplate([[0, 0], [0, 0]])).tractable
    assert "rank" in str(r)


def test_template_validation():
    with pytest.raises(InputError):
        WeightedTemplate([[1, -1], [-1, 1]])
    with pytest.raises(InputError):
        WeightedTemplate([[1, 2], [1, 1]])
    with pytest.raises(InputError):
        WeightedTemplate([[1, 2]])


def test_template_files():
    assert parse_template("3\n0 1 1\n1 0 1\n1 1 0\n") == kq(3)
    assert parse_template("2 # size\n1/2 3\n3 0\n").a[0][0] == Fraction(1, 2)
    B = WeightedTemplate([[Fraction(1, 2), 2], [2, 8]])
    assert parse_template(format_template(B)) == B
    for bad in ["", "2\n1 1\n", "2\n1 1\n1 x\n", "2 2\n1 1\n1 1\n"]:
        with pytest.raises(InputError):
            parse_template(bad)


def test_rank1_examples():
    assert z_a_rank1(complete_graph(3), ONES2) == 8
    h12 = WeightedTemplate.rank_one([1, 2])
    assert z_a_rank1(complete_graph(2), h12) == 9
    assert z_a_rank1(path_graph(3), h12) == 45
    assert z_a(path_graph(3), h12) == 45
    with pytest.raises(InputError):
        z_a_rank1(path_graph(3), kq(2))


def test_rank1_matches_brute_force():
    rng = random.Random(21)
    graphs = census(5)
    for _ in range(20):
        k = rng.randint(1, 3)
        h = [Fraction(rng.randint(0, 4), rng.randint(1, 3)) for _ in range(k)]
        A = WeightedTemplate.rank_one(h)
        for G in graphs:
            assert z_a_rank1(G, A) == z_a(G, A)


def test_rank1_with_loops_and_multi_edges():
    A = WeightedTemplate.rank_one([1, 3])
    G = Multigraph(3, [(0, 0), (0, 1), (0, 1), (1, 2)])
    assert z_a_rank1(G, A) == z_a(G, A) == z_a_itertools(G, A.a)


# tree decompositions


def test_decomposition_examples():
    assert tree_decompose(path_graph(6)).width == 1
    assert tree_decompose(cycle_graph(4)).width == 2
    assert tree_decompose(complete_graph(5)).width == 4


def test_every_decomposition_validates():
    for G in census(6):
        assert validate(G, tree_decompose(G)) == []
    for s in range(30):
        G = sample_gnp(12, Fraction(1, 3), s)
        assert validate(G, tree_decompose(G)) == []


def test_validator_catches_violations():
    G = cycle_graph(4)
    td = TreeDecomposition((frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})), ((0, 1), (1, 2)))
    assert "edge coverage" in validate(G, td)
    td = TreeDecomposition((frozenset({0, 1, 3}), frozenset({1, 2}), frozenset({2, 3})), ((0, 1), (1, 2)))
    assert any(p.startswith("running intersection") for p in validate(G, td))
    td = TreeDecomposition((frozenset({0, 1, 2}),), ())
    assert "vertex coverage" in validate(G, td)
    td = TreeDecomposition((frozenset({0, 1, 2, 3}), frozenset({0})), ())
    assert any(p.startswith("tree") for p in validate(G, td))


def test_nice_decomposition_shape():
    G = cycle_graph(5)
    nodes, root = nice_decomposition(tree_decompose(G))
    assert nodes[root][1] == frozenset()
    kinds = {n[0] for n in nodes}
    assert kinds <= {"leaf", "introduce", "forget", "join"}
    forgets = [n[2] for n in nodes if n[0] == "forget"]
    assert sorted(forgets) == list(range(5))


def test_dp_counts_match_brute_force():
    for G in census(5):
        nodes, root = nice_decomposition(tree_decompose(G))
        for q in range(4):
            assert count_colorings_dp(G, nodes, root, q) == proper_colorings(G, q)


def test_fpt_examples():
    from graphpoly.poly import parse_poly

    assert chromatic_fpt(path_graph(4)) == parse_poly("x*(x-1)^3") == chromatic(path_graph(4))
    assert chromatic_fpt(cycle_graph(5)) == parse_poly("(x-1)^5 - (x-1)") == chromatic(cycle_graph(5))
    assert chromatic_fpt(Multigraph(1)) == parse_poly("x")
    assert chromatic_fpt(Multigraph(2, [(0, 1), (1, 1)])).is_zero()


def test_fpt_equals_chromatic_n_le_6():
    for G in census(6):
        assert chromatic_fpt(G) == chromatic(G)


def test_fpt_width_cap():
    with pytest.raises(SizeCapError):
        chromatic_fpt(complete_graph(6), max_width=3)
