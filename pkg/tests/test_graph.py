import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from graphpoly.enumeration import census, enumerate_multigraphs, enumerate_unlabeled, sample_gnp
from graphpoly.errors import Graph6Error, InputError, LoopEdgeError, SizeCapError
from graphpoly.graph import (
    Multigraph,
    complete_graph,
    components,
    contract_edge,
    cycle_graph,
    delete_edge,
    disjoint_union,
    empty_graph,
    extract_edge,
    format_edge_list,
    is_bridge,
    parse_edge_list,
    path_graph,
    split_components,
    star_graph,
)
from graphpoly.graph6 import encode_graph6, parse_graph6


@st.composite
def multigraphs(draw, max_n=6, max_m=8):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    edges = [tuple(sorted(draw(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))) for _ in range(m)]
    return Multigraph(n, edges)


def test_edge_multiset_order_independent():
    assert Multigraph(3, [(0, 1), (2, 1)]) == Multigraph(3, [(1, 2), (1, 0)])
    assert Multigraph(2, [(0, 1), (0, 1)]) != Multigraph(2, [(0, 1)])


def test_endpoint_out_of_range():
    with pytest.raises(InputError):
        Multigraph(2, [(0, 2)])


def test_delete_examples():
    G = delete_edge(complete_graph(2), 0)
    assert (G.n, G.m, G.k) == (2, 0, 2)
    for e in range(3):
        H = delete_edge(complete_graph(3), e)
        assert sorted(H.degrees()) == [1, 1, 2] and H.k == 1
    L = delete_edge(Multigraph(1, [(0, 0)]), 0)
    assert L == Multigraph(1)


def test_delete_index_error():
    with pytest.raises(InputError):
        delete_edge(complete_graph(2), 1)


def test_contract_examples():
    assert contract_edge(complete_graph(2), 0) == Multigraph(1)
    H = contract_edge(cycle_graph(3), 0)
    assert (H.n, H.m, H.loops()) == (2, 2, 0)
    D = contract_edge(Multigraph(2, [(0, 1), (0, 1)]), 0)
    assert D == Multigraph(1, [(0, 0)])


def test_contract_and_extract_reject_loops():
    L = Multigraph(2, [(0, 0), (0, 1)])
    with pytest.raises(LoopEdgeError):
        contract_edge(L, 0)
    with pytest.raises(LoopEdgeError):
        extract_edge(L, 0)


def test_extract_examples():
    assert extract_edge(complete_graph(2), 0) == Multigraph(0)
    P = path_graph(3)  # 0-1-2
    i = P.edges.index((0, 1))
    assert extract_edge(P, i) == Multigraph(1)
    assert extract_edge(complete_graph(4), 2) == complete_graph(2)


def test_components_examples():
    assert components(empty_graph(4))[0] == 4
    assert components(disjoint_union(complete_graph(3), complete_graph(2)))[0] == 2
    assert components(cycle_graph(4))[0] == 1


def test_bridges():
    P = path_graph(4)
    assert all(is_bridge(P, i) for i in range(P.m))
    C = cycle_graph(4)
    assert not any(is_bridge(C, i) for i in range(C.m))
    assert not is_bridge(Multigraph(1, [(0, 0)]), 0)
    assert not is_bridge(Multigraph(2, [(0, 1), (0, 1)]), 0)


@given(multigraphs())
def test_operation_sizes(G):
    for i, (u, v) in enumerate(G.edges):
        D = delete_edge(G, i)
        assert (D.n, D.m) == (G.n, G.m - 1)
        if u != v:
            C = contract_edge(G, i)
            assert (C.n, C.m) == (G.n - 1, G.m - 1)
            assert extract_edge(G, i).n == G.n - 2


@given(multigraphs(), multigraphs())
def test_disjoint_union_counts(G, H):
    U = disjoint_union(G, H)
    assert U.k == G.k + H.k and U.m == G.m + H.m and U.n == G.n + H.n


@given(multigraphs())
def test_split_components_roundtrip(G):
    parts = split_components(G)
    assert len(parts) == G.k
    assert sum(p.n for p in parts) == G.n and sum(p.m for p in parts) == G.m


def test_edge_list_format():
    G = Multigraph(3, [(0, 1), (1, 1), (0, 1)])
    text = format_edge_list(G)
    assert text.splitlines()[0] == "3 3"
    assert parse_edge_list(text) == G
    with pytest.raises(InputError):
        parse_edge_list("2 2\n0 1\n")
    with pytest.raises(InputError):
        parse_edge_list("2 1\n0 x\n")


def test_graph6_examples():
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("Bw") == complete_graph(3)
    assert encode_graph6(complete_graph(3)) == "Bw"
    assert encode_graph6(Multigraph(0)) == "?"


@pytest.mark.parametrize("bad", ["", "A", "A_?", "B\x7f", "A "])
def test_graph6_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_rejects_multigraphs():
    with pytest.raises(Graph6Error):
        encode_graph6(Multigraph(1, [(0, 0)]))


def test_graph6_roundtrip_census():
    for G in census(7):
        s = encode_graph6(G)
        assert parse_graph6(s) == G
        assert encode_graph6(parse_graph6(s)) == s


@given(st.integers(1, 12), st.data())
def test_graph6_roundtrip_random(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    keep = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    G = Multigraph(n, [p for p, k in zip(pairs, keep) if k])
    assert parse_graph6(encode_graph6(G)) == G


def test_sample_gnp():
    assert sample_gnp(6, 0, 3) == Multigraph(6)
    assert sample_gnp(6, 1, 3) == complete_graph(6)
    assert sample_gnp(20, Fraction(1, 2), 7) == sample_gnp(20, Fraction(1, 2), 7)
    assert sample_gnp(20, Fraction(1, 2), 7) != sample_gnp(20, Fraction(1, 2), 8)
    with pytest.raises(InputError):
        sample_gnp(3, 2, 0)


def test_sample_gnp_density():
    G = sample_gnp(60, Fraction(1, 2), 11)
    assert abs(G.m - 885) < 120  # C(60,2)/2 = 885


def test_enumeration_counts_small():
    assert [sum(1 for _ in enumerate_unlabeled(n)) for n in range(0, 6)] == [1, 1, 2, 4, 11, 34]


def test_enumeration_cap():
    with pytest.raises(SizeCapError):
        list(enumerate_unlabeled(8))


def test_enumeration_deterministic():
    assert list(enumerate_unlabeled(5)) == list(enumerate_unlabeled(5))


def test_multigraph_corpus():
    ms = enumerate_multigraphs(3)
    assert all(G.m <= 3 and min(G.degrees(), default=1) > 0 for G in ms)
    assert Multigraph(0) in ms
    from graphpoly.canon import canonical

    assert len({canonical(G) for G in ms}) == len(ms)


def test_star_and_path_helpers():
    assert sorted(star_graph(3).degrees()) == [1, 1, 1, 3]
    assert path_graph(1) == Multigraph(1)
    rng = random.Random(0)
    perm = list(range(5))
    rng.shuffle(perm)
    assert cycle_graph(5).relabel(perm).m == 5
