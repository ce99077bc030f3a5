import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexfam import graphs as gr
from convexfam.graphs import Digraph, Graph, GraphError

from oracles import directed_cycles_bruteforce, induced_cycle_sets


def random_graph(rng, n, p):
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph(n, edges)


def test_construction_normalizes_and_validates():
    g = Graph(3, [(2, 1), (1, 2), (2, 3)])
    assert g.edges == frozenset({(1, 2), (2, 3)})
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(2, [(1, 3)])
    with pytest.raises(GraphError):
        Digraph(2, [(2, 2)])


def test_induced_subgraph():
    p3 = gr.path(3)
    sub = gr.induced_subgraph(p3, [1, 3])
    assert sub.n == 2 and sub.m == 0
    assert gr.induced_subgraph(p3, p3.vertices()) == p3
    assert gr.induced_subgraph(p3, []).n == 0
    with pytest.raises(GraphError):
        gr.induced_subgraph(p3, [4])
    d = Digraph(3, [(1, 2), (3, 1)])
    sub = gr.induced_subgraph(d, [1, 3])
    assert sub.arcs == frozenset({(2, 1)})  # relabeled, 3 -> 2


def test_connectivity_conventions():
    assert gr.is_connected(gr.null_graph())
    assert gr.is_connected(Graph(1))
    assert gr.is_connected(gr.cycle(5))
    assert not gr.is_connected(Graph(2))
    assert gr.is_strongly_connected(Digraph(0))
    assert gr.is_strongly_connected(Digraph(1))
    assert gr.is_strongly_connected(gr.directed_cycle(4))
    assert not gr.is_strongly_connected(Digraph(2, [(1, 2)]))
    assert gr.is_strongly_connected(gr.two_triangles_shared_vertex())


def test_two_triangles_breaks_by_any_deletion():
    d = gr.two_triangles_shared_vertex()
    for v in d.vertices():
        assert not gr.is_strongly_connected(gr.delete_vertex(d, v))


def test_chordless_cycles_examples():
    assert gr.chordless_cycles(gr.cycle(6)) == [(1, 2, 3, 4, 5, 6)]
    assert len(gr.chordless_cycles(gr.complete(4))) == 4
    assert all(len(c) == 3 for c in gr.chordless_cycles(gr.complete(4)))


CUBE_INDUCED_6_CYCLES = 4  # one per antipodal vertex pair


def test_cube_cycle_structure():
    c = gr.cube()
    assert c.n == 8 and c.m == 12
    cycles = gr.chordless_cycles(c)
    by_len = {}
    for cyc in cycles:
        by_len.setdefault(len(cyc), []).append(cyc)
    assert sorted(by_len) == [4, 6]
    assert len(by_len[4]) == 6  # the face 4-cycles
    assert len(by_len[6]) == CUBE_INDUCED_6_CYCLES
    # oracle cross-check
    oracle = induced_cycle_sets(c)
    assert {frozenset(cc) for cc in cycles} == oracle


def test_cube_every_deletion_creates_6_cycle():
    c = gr.cube()
    for e in c.sorted_edges():
        assert gr.has_chordless_cycle(gr.delete_edge(c, e),
                                      lambda L: L == 6, max_len=6)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 6), st.random_module())
def test_chordless_cycles_match_oracle(n, rnd):
    rng = random.Random(rnd.seed)
    g = random_graph(rng, n, rng.random())
    got = {frozenset(c) for c in gr.chordless_cycles(g)}
    assert got == induced_cycle_sets(g)
    # each cycle reported exactly once
    assert len(gr.chordless_cycles(g)) == len(got)


def test_ternary_examples():
    assert gr.is_ternary(gr.cycle(5))
    assert not gr.is_ternary(gr.cycle(6))
    assert gr.is_ternary(gr.wrochna())


def test_wrochna_shape_and_minimality():
    w = gr.wrochna()
    assert w.n == 15 and w.m == 25
    for e in w.sorted_edges():
        assert not gr.is_ternary(gr.delete_edge(w, e))


def test_complement_and_line_graph():
    c5 = gr.cycle(5)
    cc = gr.complement(c5)
    assert cc.m == 5 and all(cc.degree(v) == 2 for v in cc.vertices())
    assert gr.is_connected(cc)  # the complement of C5 is again a 5-cycle
    lg = gr.line_graph(gr.path(3))
    assert lg.n == 2 and lg.m == 1


def test_circulant():
    c5 = gr.circulant(5, [1])
    assert c5.arcs == gr.directed_cycle(5).arcs
    g43 = gr.circulant(43, [1, 7, 8])
    assert g43.n == 43 and g43.m == 129
    with pytest.raises(GraphError):
        gr.circulant(7, [1, 7, 8])  # 7 is 0 mod 7: a loop
    with pytest.raises(GraphError):
        gr.circulant(8, [8])


def test_directed_cycle_enumeration_matches_oracle():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 5)
        arcs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)
                if u != v and rng.random() < 0.4]
        d = Digraph(n, arcs)
        assert set(gr.directed_cycles(d)) == directed_cycles_bruteforce(d)


def test_all_even_cycle_check_matches_enumeration():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randint(2, 6)
        arcs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)
                if u != v and rng.random() < 0.3]
        d = Digraph(n, arcs)
        lens = gr.directed_cycle_lengths(d)
        assert gr.all_directed_cycles_even(d) == all(L % 2 == 0 for L in lens)


def test_icosidodecahedron_shape():
    ico = gr.icosidodecahedron()
    assert ico.n == 30 and ico.m == 60
    assert all(ico.degree(v) == 4 for v in ico.vertices())


@pytest.mark.slow
def test_icosidodecahedron_cycle_facts():
    ico = gr.icosidodecahedron()
    assert not gr.has_chordless_cycle(ico, lambda L: L == 6, max_len=6)
    assert gr.has_chordless_cycle(ico, lambda L: L == 3, max_len=3)
    assert gr.has_chordless_cycle(ico, lambda L: L == 9, max_len=9)
    for e in ico.sorted_edges():
        assert gr.has_chordless_cycle(gr.delete_edge(ico, e),
                                      lambda L: L == 6, max_len=6)
