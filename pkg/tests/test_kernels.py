import random

import pytest

from convexfam import graphs as gr
from convexfam import kernels as ker
from convexfam.graphs import Digraph

from oracles import all_kernels_bruteforce


def random_digraph(rng, n, p):
    arcs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)
            if u != v and rng.random() < p]
    return Digraph(n, arcs)


def test_is_kernel_examples():
    c4 = gr.directed_cycle(4)
    assert ker.is_kernel(c4, {1, 3})
    assert ker.is_kernel(c4, {2, 4})
    assert not ker.is_kernel(gr.directed_cycle(3), {1})
    cert = ker.kernel_certificate(c4, {1, 3})
    assert cert is not None and cert.verify(c4)
    with pytest.raises(gr.GraphError):
        ker.is_kernel(c4, {9})


def test_find_and_count_examples():
    p3 = gr.directed_path(3)
    res = ker.find_kernel(p3)
    assert res.status == ker.FOUND and res.kernel == frozenset({1, 3})
    assert ker.count_kernels(p3).count == 1
    assert ker.count_kernels(gr.directed_cycle(4)).count == 2
    assert ker.count_kernels(gr.directed_cycle(5)).count == 0
    assert ker.count_kernels(gr.directed_cycle(6)).count == 2


def test_enumeration_matches_bruteforce():
    rng = random.Random(11)
    for _ in range(250):
        d = random_digraph(rng, rng.randint(0, 6), rng.random())
        got = sorted(map(sorted, ker.all_kernels(d)))
        want = sorted(map(sorted, all_kernels_bruteforce(d)))
        assert got == want, d


def test_budget_yields_undecided():
    d = gr.circulant(16, [1, 7, 8])
    res = ker.find_kernel(d, budget=5)
    assert res.status == ker.UNDECIDED
    cnt = ker.count_kernels(d, budget=5)
    assert not cnt.complete
    with pytest.raises(gr.GraphError):
        ker.has_kernel(d, budget=5)


def test_richardson_on_parity_built_digraphs():
    # arcs only flip a random 2-coloring, so every directed cycle is even
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(1, 8)
        parity = [rng.randint(0, 1) for _ in range(n + 1)]
        arcs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)
                if u != v and parity[u] != parity[v] and rng.random() < 0.5]
        d = Digraph(n, arcs)
        assert gr.all_directed_cycles_even(d)
        assert ker.find_kernel(d).status == ker.FOUND


def test_all_odd_cycles_at_most_one_kernel():
    rng = random.Random(13)
    seen = 0
    for _ in range(800):
        d = random_digraph(rng, rng.randint(1, 7), 0.18)
        lens = gr.directed_cycle_lengths(d)
        if not lens or any(L % 2 == 0 for L in lens):
            continue
        seen += 1
        assert ker.count_kernels(d).count <= 1
    assert seen > 20


def test_acyclic_unique_kernel():
    rng = random.Random(14)
    for _ in range(200):
        n = rng.randint(1, 8)
        order = list(range(1, n + 1))
        rng.shuffle(order)
        arcs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)
                if rng.random() < 0.4]
        d = Digraph(n, arcs)
        assert gr.is_acyclic(d)
        assert ker.count_kernels(d).count == 1


def test_circulant16_facts():
    g16 = gr.circulant(16, [1, 7, 8])
    assert ker.find_kernel(g16).status == ker.NONE
    for v in range(1, 17):
        assert ker.find_kernel(gr.delete_vertex(g16, v)).status == ker.FOUND
    # after deleting the last vertex the unique kernel is {9,11,13,15}; the
    # published set {1,3,5,7} is its image under i -> 16 - i and verifies on
    # the reversed orientation
    sub = gr.delete_vertex(g16, 16)
    assert ker.all_kernels(sub) == [frozenset({9, 11, 13, 15})]
    assert ker.is_kernel(gr.delete_vertex(gr.reverse(g16), 16), {1, 3, 5, 7})


def test_g16_has_kernel_less_proper_induced_subgraph():
    g16 = gr.circulant(16, [1, 7, 8])
    sub = gr.induced_subgraph(g16, [1, 2, 9, 10])
    assert ker.find_kernel(sub).status == ker.NONE
