import random
from itertools import combinations

import pytest

from convexfam import coloring as col
from convexfam import graphs as gr
from convexfam.graphs import Graph

from oracles import chi_bruteforce, omega_bruteforce


def test_chi_omega_examples():
    assert (col.chromatic_number(gr.cycle(5)), col.clique_number(gr.cycle(5))) == (3, 2)
    assert (col.chromatic_number(gr.complete(4)), col.clique_number(gr.complete(4))) == (4, 4)
    c7c = gr.complement(gr.cycle(7))
    assert (col.chromatic_number(c7c), col.clique_number(c7c)) == (4, 3)
    assert col.chromatic_number(gr.null_graph()) == 0
    assert col.clique_number(Graph(3)) == 1


def test_chi_omega_match_bruteforce():
    rng = random.Random(2)
    for _ in range(120):
        n = rng.randint(0, 6)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        g = Graph(n, edges)
        assert col.chromatic_number(g) == chi_bruteforce(g)
        assert col.clique_number(g) == omega_bruteforce(g)
        assert col.chromatic_number(g) >= col.clique_number(g)


def test_perfection_examples():
    assert col.is_perfect_bruteforce(gr.path(4))
    assert col.is_perfect_spgt(gr.path(4))
    assert not col.is_perfect_bruteforce(gr.cycle(5))
    assert not col.is_perfect_spgt(gr.cycle(5))
    assert col.is_perfect_bruteforce(gr.null_graph())
    assert col.is_perfect_spgt(gr.complete_bipartite(3, 4))
    assert not col.is_perfect_spgt(gr.complement(gr.cycle(7)))


def test_spgt_equals_bruteforce_small():
    for n in range(0, 6):
        for g in gr.all_graphs(n):
            assert col.is_perfect_spgt(g) == col.is_perfect_bruteforce(g)


def test_partitionable():
    assert col.is_partitionable(gr.cycle(5))
    assert not col.is_partitionable(gr.cycle(6))
    assert not col.is_partitionable(gr.complete(4))
    assert col.is_partitionable(gr.cycle(7))
    assert col.is_partitionable(gr.complement(gr.cycle(7)))


def test_meyniel_and_critical_edges():
    house = gr.house_with_chord()
    assert col.critical_edges(house) == frozenset({(1, 3)})
    assert not col.is_meyniel(house)
    assert col.is_meyniel(gr.complete_bipartite(3, 3))
    assert col.is_meyniel(gr.complete(5))
    with pytest.raises(gr.GraphError):
        col.critical_edges(gr.cycle(5))


def test_hougardy_wagler_small():
    # a perfect graph has no critical edge iff every odd cycle of length >= 5
    # has at least two chords
    for n in range(0, 6):
        for g in gr.all_graphs(n):
            if not col.is_perfect_spgt(g):
                continue
            assert (not col.critical_edges(g)) == col.is_meyniel(g), g


def test_tables_agree_with_direct_computation():
    chi, omega = col.chi_omega_table(5)
    rng = random.Random(7)
    for _ in range(200):
        mask = rng.randrange(1 << 10)
        g = col.graph_of_mask(5, mask)
        assert chi[mask] == col.chromatic_number(g)
        assert omega[mask] == col.clique_number(g)
    perf = col.perfect_table(5)
    for _ in range(200):
        mask = rng.randrange(1 << 10)
        g = col.graph_of_mask(5, mask)
        assert perf[mask] == (1 if col.is_perfect_spgt(g) else 0)


def test_mask_round_trip():
    rng = random.Random(8)
    for _ in range(50):
        n = rng.randint(0, 6)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        g = Graph(n, edges)
        assert col.graph_of_mask(n, col.mask_of_graph(g)) == g


def test_project_mask_matches_delete_vertex():
    rng = random.Random(9)
    for _ in range(80):
        n = rng.randint(1, 6)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        g = Graph(n, edges)
        v = rng.randint(1, n)
        pm = col.project_mask(n, col.mask_of_graph(g), v)
        assert col.graph_of_mask(n - 1, pm) == gr.delete_vertex(g, v)
