import random
from dataclasses import dataclass
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexfam import graphs as gr
from convexfam import poset as ps
from convexfam.families import predicate
from convexfam.graphs import Graph
from convexfam.poset import EDGE, LINE, VERTEX, GroundPoset, PosetElement

from oracles import spanning_trees_bruteforce


@dataclass(frozen=True)
class Grid:
    n_rows: int
    n_cols: int


def vertex_poset(g):
    return GroundPoset(g, VERTEX)


CONNECTED = predicate("connected")
DISCONNECTED = predicate("disconnected")


# ---------------------------------------------------------------------------
# geometry


def test_immediate_successors_vertex():
    gp = vertex_poset(gr.path(4))
    succ = gp.immediate_successors(gp.top())
    assert len(succ) == 4
    assert all(len(s.vertices) == 3 for s in succ)
    assert gp.immediate_successors(gp.bottom()) == []


def test_immediate_successors_edge():
    gp = GroundPoset(gr.cycle(3), EDGE)
    succ = gp.immediate_successors(gp.top())
    assert len(succ) == 3
    assert all(len(s.edges) == 2 for s in succ)


def test_immediate_successors_line():
    gp = GroundPoset(Grid(2, 3), LINE)
    assert gp.element_count() == 3 * 7 + 1
    one = gp.line_element([1], [1])
    assert gp.immediate_successors(one) == [gp.bottom()]
    row = gp.line_element([1], [1, 2, 3])
    succ = gp.immediate_successors(row)
    assert len(succ) == 3 and all(len(s.cols) == 2 for s in succ)
    both = gp.line_element([1, 2], [1, 2])
    assert len(gp.immediate_successors(both)) == 4
    # anything with an empty side is the identified bottom
    assert gp.line_element([1], []) == gp.bottom()


def test_validation_rejects_foreign_elements():
    gp = vertex_poset(gr.path(3))
    with pytest.raises(ps.PosetError):
        gp.immediate_successors(PosetElement(kind="vertex-subset",
                                             vertices=frozenset({7})))
    with pytest.raises(ps.PosetError):
        gp.precedes(gp.top(), PosetElement(kind="edge-subset"))
    with pytest.raises(ps.PosetError):
        GroundPoset(gr.path(3), LINE)


def test_precedes_examples():
    gp = vertex_poset(gr.complete(4))
    a = gp.vertex_element([1, 2, 3])
    b = gp.top()
    assert gp.precedes(a, b)
    assert gp.precedes(a, a)
    c = gp.vertex_element([1, 2])
    d = gp.vertex_element([2, 3])
    assert not gp.precedes(c, d) and not gp.precedes(d, c)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.frozensets(st.integers(1, 5)), min_size=3, max_size=3))
def test_precedes_is_a_partial_order(subsets):
    gp = vertex_poset(gr.complete(5))
    a, b, c = [gp.vertex_element(s) for s in subsets]
    assert gp.precedes(a, a)
    if gp.precedes(a, b) and gp.precedes(b, a):
        assert a == b
    if gp.precedes(a, b) and gp.precedes(b, c):
        assert gp.precedes(a, c)


def test_size_cap_refusal():
    gp = GroundPoset(gr.complete(5), VERTEX, cap=10)
    with pytest.raises(ps.PosetSizeError):
        ps.minima(CONNECTED, gp)
    with pytest.raises(ps.PosetSizeError):
        list(gp.iter_elements())


# ---------------------------------------------------------------------------
# minima / local minima, engine vs definitional filter


def brute_minima(pred, gp):
    els = gp.elements()
    fam = {e for e in els if pred.eval(gp.ground, e)}
    return sorted((e for e in fam
                   if not any(o != e and gp.precedes(o, e) for o in fam)),
                  key=PosetElement.sort_key)


def brute_local_minima(pred, gp):
    els = gp.elements()
    fam = {e for e in els if pred.eval(gp.ground, e)}
    return sorted((e for e in fam
                   if not any(s in fam for s in gp.immediate_successors(e))),
                  key=PosetElement.sort_key)


def test_minima_connected_examples():
    # the null graph is the unique minimum of the connected family
    for g in (gr.path(3), gr.cycle(4), Graph(2)):
        gp = vertex_poset(g)
        assert ps.minima(CONNECTED, gp) == [gp.bottom()]
        assert ps.local_minima(CONNECTED, gp) == [gp.bottom()]


def test_minima_connected_edge_order_spanning_trees():
    for g in (gr.cycle(4), gr.complete(4), gr.path(4)):
        gp = GroundPoset(g, EDGE)
        mins = ps.minima(CONNECTED, gp)
        assert {m.edges for m in mins} == spanning_trees_bruteforce(g)
        assert ps.local_minima(CONNECTED, gp) == mins


def test_minima_sp_free_fixture():
    from convexfam import games as gm

    gp = GroundPoset(gm.sp_fixture_4x4(), LINE)
    mins = ps.minima(predicate("sp-free"), gp)
    assert set(mins) == {gp.line_element([1, 2], [1, 2]),
                         gp.line_element([3, 4], [3, 4])}


def test_local_minima_superset_of_minima_random():
    rng = random.Random(21)
    for _ in range(80):
        n = rng.randint(1, 4)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        gp = vertex_poset(Graph(n, edges))
        fam = {e: rng.random() < 0.45 for e in gp.elements()}
        pred = ps.FamilyPredicate("random", lambda g, e, fam=fam: fam[e])
        mins = ps.minima(pred, gp)
        lms = ps.local_minima(pred, gp)
        assert set(mins) <= set(lms)
        assert mins == brute_minima(pred, gp)
        assert lms == brute_local_minima(pred, gp)


def test_local_minima_two_triangles():
    d = gr.two_triangles_shared_vertex()
    gp = vertex_poset(d)
    lm = ps.local_minima(predicate("strongly-connected"), gp)
    assert gp.top() in lm
    assert gp.top() not in ps.minima(predicate("strongly-connected"), gp)


def test_local_minima_circulant16():
    g16 = gr.circulant(16, [1, 7, 8])
    gp = GroundPoset(g16, VERTEX)
    assert ps.is_local_minimum(predicate("kernel-less"), gp, gp.top())


# ---------------------------------------------------------------------------
# the four verdicts


def test_connected_vertex_order_classification():
    rep = ps.classify(CONNECTED, vertex_poset(gr.path(3)))
    assert rep.verdicts() == {"convex": True, "strongly_convex": True,
                              "weakly_hereditary": False, "hereditary": False}
    f, p = rep.witnesses["hereditary"]
    assert f.vertices == frozenset({1, 2, 3}) and p.vertices == frozenset({1, 3})


def test_disconnected_strongly_convex_not_weakly_hereditary():
    g = Graph(4, [(1, 2), (2, 3)])  # 2-path plus the isolated vertex 4
    rep = ps.classify(DISCONNECTED, vertex_poset(g))
    assert rep.strongly_convex and not rep.weakly_hereditary
    assert all(len(m.vertices) == 2 for m in rep.minima)


def test_disconnected_edge_order_hereditary():
    g = Graph(4, [(1, 2), (2, 3)])
    rep = ps.classify(DISCONNECTED, GroundPoset(g, EDGE))
    assert rep.hereditary
    assert [m.edges for m in rep.minima] == [frozenset()]


def test_empty_family_all_vacuous():
    pred = ps.FamilyPredicate("empty", lambda g, e: False)
    rep = ps.classify(pred, vertex_poset(gr.path(3)))
    assert rep.convex and rep.strongly_convex
    assert rep.weakly_hereditary and rep.hereditary
    assert rep.minima == () and rep.local_minima == ()


def test_imperfect_vertex_order_convex_on_odd_hole_ground():
    g = Graph(6, list(gr.cycle(5).edges) + [(6, 1)])
    rep = ps.classify(predicate("imperfect"), vertex_poset(g))
    assert rep.convex


def test_report_invariants_hold():
    rng = random.Random(22)
    for _ in range(60):
        n = rng.randint(1, 4)
        gp = vertex_poset(Graph(n, [e for e in combinations(range(1, n + 1), 2)
                                    if rng.random() < 0.5]))
        fam = {e: rng.random() < 0.5 for e in gp.elements()}
        pred = ps.FamilyPredicate("random", lambda g, e, fam=fam: fam[e])
        rep = ps.classify(pred, gp)
        chain = (rep.hereditary, rep.weakly_hereditary,
                 rep.strongly_convex, rep.convex)
        for a, b in zip(chain, chain[1:]):
            assert not (a and not b)
        assert set(rep.minima) <= set(rep.local_minima)
        # every reported witness reproduces its verdict
        if "convex" in rep.witnesses:
            w = rep.witnesses["convex"]
            assert fam[w]
            assert all(not fam[s] for s in gp.immediate_successors(w))
            assert any(fam[o] and gp.strictly_precedes(o, w) for o in gp.elements())
        if "hereditary" in rep.witnesses:
            f, p = rep.witnesses["hereditary"]
            assert fam[f] and not fam[p]
            assert p in gp.immediate_successors(f)
        if "weakly_hereditary" in rep.witnesses:
            f, p, fp = rep.witnesses["weakly_hereditary"]
            assert fam[f] and not fam[p] and fp in rep.minima
            assert gp.strictly_precedes(p, f) and gp.precedes(fp, p)
        if "strongly_convex" in rep.witnesses and rep.convex:
            f, fp = rep.witnesses["strongly_convex"]
            assert fam[f] and fp in rep.minima and gp.strictly_precedes(fp, f)
            assert not any(fam[s] and gp.precedes(fp, s)
                           for s in gp.immediate_successors(f))


def test_brute_force_agreement_on_random_predicates():
    rng = random.Random(23)
    for _ in range(120):
        n = rng.randint(1, 4)
        gp = vertex_poset(Graph(n, [e for e in combinations(range(1, n + 1), 2)
                                    if rng.random() < 0.5]))
        els = gp.elements()
        fam = {e: rng.random() < 0.4 for e in els}
        pred = ps.FamilyPredicate("random", lambda g, e, fam=fam: fam[e])
        mins = set(brute_minima(pred, gp))
        # weak heredity from the definition
        wh = True
        for f in els:
            if not fam[f]:
                continue
            for p in els:
                if fam[p] or not gp.strictly_precedes(p, f):
                    continue
                if any(gp.precedes(m, p) for m in mins):
                    wh = False
        assert ps.is_weakly_hereditary(pred, gp)[0] == wh
        # heredity over all successors, not only covers
        hered = all(fam[p] for f in els if fam[f]
                    for p in els if gp.strictly_precedes(p, f))
        assert ps.is_hereditary(pred, gp)[0] == hered
        # strong convexity from the definition
        lms = set(brute_local_minima(pred, gp))
        sc = mins == lms
        if sc:
            for f in els:
                if not fam[f]:
                    continue
                for m in mins:
                    if not gp.strictly_precedes(m, f):
                        continue
                    if not any(fam[s] and gp.precedes(m, s)
                               for s in gp.immediate_successors(f)):
                        sc = False
        assert ps.is_strongly_convex(pred, gp)[0] == sc
        assert ps.is_convex(pred, gp)[0] == (mins == lms)


# ---------------------------------------------------------------------------
# containment-defined families


def contains_some_target_vertex(targets):
    def run(g, e):
        return any(t <= e.vertices for t in targets)
    return run


def contains_some_target_edge(targets):
    def run(g, e):
        return any(t <= e.edges for t in targets)
    return run


def test_containment_families_weakly_hereditary():
    rng = random.Random(24)
    for _ in range(60):
        n = rng.randint(1, 5)
        g = Graph(n, [e for e in combinations(range(1, n + 1), 2)
                      if rng.random() < 0.5])
        gp = vertex_poset(g)
        k = rng.randint(1, 3)
        targets = [frozenset(rng.sample(range(1, n + 1), rng.randint(0, n)))
                   for _ in range(k)]
        pred = ps.FamilyPredicate("contains", contains_some_target_vertex(targets))
        assert ps.is_weakly_hereditary(pred, gp)[0]
        # hereditary iff some target is the empty (null) sub-object
        assert ps.is_hereditary(pred, gp)[0] == (frozenset() in targets)
        ge = GroundPoset(g, EDGE)
        edges = sorted(g.edges)
        etargets = [frozenset(rng.sample(edges, rng.randint(0, len(edges))))
                    for _ in range(k)]
        epred = ps.FamilyPredicate("contains", contains_some_target_edge(etargets))
        assert ps.is_weakly_hereditary(epred, ge)[0]
        assert ps.is_hereditary(epred, ge)[0] == (frozenset() in etargets)


def test_spec_single_target_heredity_boundary():
    # one non-trivial target: weakly hereditary but not hereditary
    g = gr.path(4)
    gp = vertex_poset(g)
    pred = ps.FamilyPredicate(
        "contains-12", contains_some_target_vertex([frozenset({1, 2})]))
    assert ps.is_weakly_hereditary(pred, gp)[0]
    assert not ps.is_hereditary(pred, gp)[0]


# ---------------------------------------------------------------------------
# witness-scale helpers


def test_refute_convexity_wrochna():
    w = gr.wrochna()
    gp = GroundPoset(w, EDGE, cap=1 << 26)
    ref = ps.refute_convexity(predicate("ternary"), gp, gp.top(),
                              below=gp.bottom())
    assert ref is not None
    assert ref.member_below == gp.bottom()


def test_refute_convexity_rejects_non_local_minima():
    g = gr.path(3)  # connected, but deleting an endpoint stays connected
    gp = vertex_poset(g)
    assert ps.refute_convexity(CONNECTED, gp, gp.top()) is None


def test_find_member_strictly_below():
    g16 = gr.circulant(16, [1, 7, 8])
    gp = GroundPoset(g16, VERTEX)
    found = ps.find_member_strictly_below(predicate("kernel-less"), gp,
                                          gp.top(), max_rank=4)
    assert found is not None and len(found.vertices) == 4
    with pytest.raises(ps.PosetSizeError):
        ps.find_member_strictly_below(predicate("kernel-less"), gp,
                                      gp.top(), budget=3)
