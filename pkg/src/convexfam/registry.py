"""The family catalog: every (family, order) pair with its expected
classification, the desk-scale universe the claim is audited on, and the
audit driver that replays the poset engine over that universe.

Expected verdicts are True, False, or "unverified".  True means the verdict
must hold on every audited ground; False means at least one audited ground
must exhibit a violation (with a witness); "unverified" marks claims whose
only known evidence lies beyond desk scale (e.g. edge-critical perfect
graphs with every edge critical), and is never guessed.

Two catalog verdicts deliberately differ from the older informal claims
they descend from: under the spanning-subgraph order the families
"imperfect" and "non-ternary" are not weakly hereditary (adding edges can
destroy every induced odd hole / ternary cycle, so the containment-family
argument does not apply), and "chromatic number exceeds clique number" is
not even convex (the 5-wheel is locally edge-minimal but not minimal).  The
audit exhibits concrete witnesses for all three.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Optional

from . import coloring as col
from . import dgraphs as dg
from . import games as gm
from . import graphs as gr
from . import kernels as ker
from .families import predicate
from .poset import (
    EDGE,
    LINE,
    VERTEX,
    GroundPoset,
    PosetElement,
    classify,
    find_member_strictly_below,
    is_local_minimum,
    refute_convexity,
)

PROPS = ("convex", "strongly_convex", "weakly_hereditary", "hereditary")
UNVERIFIED = "unverified"


@dataclass(frozen=True)
class FamilyEntry:
    name: str
    kind: str       # graph | digraph | dgraph | matrix | bimatrix | gameform
    order: str      # vertex | edge | line
    predicate: str  # key into families.PREDICATES
    expected: dict  # prop -> True | False | "unverified"
    expected_minima: str
    universe: str
    reference: str = ""
    aliases: tuple = ()

    def __post_init__(self):
        ladder = [self.expected[p] for p in
                  ("hereditary", "weakly_hereditary", "strongly_convex", "convex")]
        known = [v for v in ladder if v != UNVERIFIED]
        # chain: a True verdict forces True on everything weaker and known
        for i, v in enumerate(ladder):
            if v is True:
                for w in ladder[i + 1:]:
                    assert w is not False, f"{self.name}: expected verdicts break the chain"


@dataclass
class GroundVerdict:
    label: str
    verdicts: dict
    minima_ok: Optional[bool] = None
    witnesses: dict = field(default_factory=dict)
    note: str = ""


@dataclass
class AuditReport:
    entry: FamilyEntry
    grounds: list
    mismatches: list
    skipped: list

    @property
    def ok(self) -> bool:
        return not self.mismatches


class AuditBoundsError(ValueError):
    pass


@dataclass
class AuditBounds:
    n: Optional[int] = None
    d: Optional[int] = None
    max_size: Optional[int] = None
    alphabet: Optional[int] = None
    seed: int = 0
    slow: bool = False

    HARD = {"n": 7, "d": 3, "max_size": 4, "alphabet": 4}

    def resolve(self, **defaults):
        vals = {}
        for key, dflt in defaults.items():
            v = getattr(self, key, None)
            v = dflt if v is None else v
            cap = self.HARD.get(key)
            if cap is not None and v > cap:
                raise AuditBoundsError(f"bound {key}={v} above the hard cap {cap}")
            vals[key] = v
        return vals


# ---------------------------------------------------------------------------
# ground generators


def _graphs_upto(n: int) -> Iterator[tuple[str, gr.Graph]]:
    for k in range(n + 1):
        for i, g in enumerate(gr.all_graphs(k)):
            yield f"graph-n{k}-#{i}", g


def _connected_graphs_upto(n: int):
    for label, g in _graphs_upto(n):
        if gr.is_connected(g):
            yield label, g


def _digraphs_upto(n: int):
    for k in range(n + 1):
        for i, d in enumerate(gr.all_digraphs(k)):
            yield f"digraph-n{k}-#{i}", d


def _sc_digraphs_upto(n: int):
    for label, d in _digraphs_upto(n):
        if gr.is_strongly_connected(d):
            yield label, d


def _dgraphs_upto(n: int, d: int):
    for k in range(n + 1):
        for i, g in enumerate(dg.all_dgraphs(k, d if k > 1 else 1)):
            yield f"dgraph-n{k}d{d}-#{i}", g


def _matrices(sizes, alphabet: int):
    letters = list(range(alphabet))
    for nr, nc in sizes:
        for i, grid in enumerate(product(letters, repeat=nr * nc)):
            rows = [list(grid[r * nc:(r + 1) * nc]) for r in range(nr)]
            yield f"matrix-{nr}x{nc}-#{i}", gm.MatrixGame(rows)


def _bimatrices(sizes, alphabet: int):
    letters = list(range(alphabet))
    for nr, nc in sizes:
        cells = nr * nc
        for i, grid in enumerate(product(letters, repeat=2 * cells)):
            a = [list(grid[r * nc:(r + 1) * nc]) for r in range(nr)]
            b = [list(grid[cells + r * nc:cells + (r + 1) * nc]) for r in range(nr)]
            yield f"bimatrix-{nr}x{nc}-#{i}", gm.BimatrixGame(a, b)


def _gameforms(sizes, alphabet: int):
    letters = [f"w{i}" for i in range(1, alphabet + 1)]
    for nr, nc in sizes:
        for i, grid in enumerate(product(letters, repeat=nr * nc)):
            rows = [list(grid[r * nc:(r + 1) * nc]) for r in range(nr)]
            yield f"form-{nr}x{nc}-#{i}", gm.GameForm(rows)


def _undirected_circulant(n: int, gens) -> gr.Graph:
    edges = set()
    for g in gens:
        for i in range(1, n + 1):
            j = (i + g - 1) % n + 1
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return gr.Graph(n, edges)


def _c5_plus_ear() -> gr.Graph:
    return gr.Graph(6, list(gr.cycle(5).edges) + [(6, 1), (6, 2)])


def _c5_chord_two_holes() -> gr.Graph:
    """Chorded 5-cycle plus a second odd hole through the new vertex; the
    weak-heredity counterexample ground for imperfect spanning subgraphs."""
    return gr.Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (5, 6), (2, 6)])


def _wheel5() -> gr.Graph:
    return gr.Graph(6, list(gr.cycle(5).edges) + [(6, i) for i in range(1, 6)])


def _c6_two_chords() -> gr.Graph:
    return gr.Graph(6, list(gr.cycle(6).edges) + [(1, 4), (2, 6)])


def _c3_plus_isolated() -> gr.Digraph:
    return gr.Digraph(4, [(1, 2), (2, 3), (3, 1)])


def _triangle_with_tail() -> gr.Digraph:
    return gr.Digraph(4, [(1, 2), (2, 3), (3, 1), (1, 4)])


def ne_free_lm_not_min_4x4() -> gm.BimatrixGame:
    """Locally minimal NE-free 4x4 game holding an NE-free 2x2 subgame at
    rows {1,2} x columns {1,3}: in the local-vs-global gap for NE-freeness."""
    a = [[80, 24, 95, 46], [95, 48, 80, 63], [45, 80, 56, 95], [50, 95, 46, 80]]
    b = [[95, 29, 80, 60], [80, 63, 95, 47], [25, 95, 42, 80], [66, 80, 12, 95]]
    return gm.BimatrixGame(a, b)


# ---------------------------------------------------------------------------
# minima shape checks


def _minima_all(check: Callable) -> Callable:
    def run(ground, minima) -> bool:
        return all(check(ground, m) for m in minima)
    return run


def _is_bottom(ground, m: PosetElement) -> bool:
    return m.rank() == 0


def _induces_cycle_mod3(g, m) -> bool:
    sub = gr.induced_subgraph(g, m.vertices)
    return (sub.n >= 3 and sub.n % 3 == 0 and sub.m == sub.n
            and all(sub.degree(v) == 2 for v in sub.vertices())
            and gr.is_connected(sub))


def _edges_cycle_plus_isolated(g, m, length_pred) -> bool:
    if not m.edges:
        return False
    sub = gr.Graph(g.n, m.edges)
    core = [v for v in sub.vertices() if sub.degree(v) > 0]
    if any(sub.degree(v) != 2 for v in core):
        return False
    if len(core) != sub.m or not length_pred(len(core)):
        return False
    return gr.is_connected(gr.induced_subgraph(sub, core))


def _induces_hole_or_antihole(g, m) -> bool:
    sub = gr.induced_subgraph(g, m.vertices)
    for cand in (sub, gr.complement(sub)):
        k = cand.n
        if (k >= 5 and k % 2 == 1 and cand.m == k
                and all(cand.degree(v) == 2 for v in cand.vertices())
                and gr.is_connected(cand)):
            return True
    return False


def _nonadjacent_pair(g, m) -> bool:
    vs = sorted(m.vertices)
    return len(vs) == 2 and not g.has_edge(*vs)


def _pair_missing_arc(d, m) -> bool:
    vs = sorted(m.vertices)
    return len(vs) == 2 and not (d.has_arc(vs[0], vs[1]) and d.has_arc(vs[1], vs[0]))


def _spanning_tree(g, m) -> bool:
    sub = gr.spanning_subgraph(g, m.edges)
    return sub.m == max(g.n - 1, 0) and gr.is_connected(sub)


def _induces_pi_or_delta(g, m) -> bool:
    vs = sorted(m.vertices)
    return ((len(vs) == 4 and dg.pi_witness_on(g, vs) == tuple(vs))
            or (len(vs) == 3 and dg.delta_witness_on(g, vs) == tuple(vs)))


def _sp_free_2x2(m, elem) -> bool:
    return (len(elem.rows) == 2 and len(elem.cols) == 2
            and not gm.has_sp(m.submatrix(elem.rows, elem.cols)))


def _ne_free_cell(g, elem) -> bool:
    return (len(elem.rows) >= 2 and len(elem.cols) >= 2
            and not gm.has_ne(g.subgame(elem.rows, elem.cols)))


def _catalog_2x2(f, elem) -> bool:
    if len(elem.rows) != 2 or len(elem.cols) != 2:
        return False
    return gm.not_tight_2x2_type(f.subform(elem.rows, elem.cols)) is not None


def _odd_directed_cycle_plus_isolated(d, m) -> bool:
    if not m.edges:
        return False
    arcs = sorted(m.edges)
    outs = {}
    ins = {}
    for u, v in arcs:
        if u in outs or v in ins:
            return False
        outs[u] = v
        ins[v] = u
    if set(outs) != set(ins) or len(arcs) % 2 == 0:
        return False
    start = arcs[0][0]
    seen = 1
    cur = outs[start]
    while cur != start:
        if cur not in outs:
            return False
        cur = outs[cur]
        seen += 1
    return seen == len(arcs)


# ---------------------------------------------------------------------------
# special, witness-based audits for grounds too large to enumerate


def _special_wrochna(bounds) -> list[GroundVerdict]:
    w = gr.wrochna()
    pred = predicate("ternary")
    poset = GroundPoset(w, EDGE, cap=1 << 26)
    ref = refute_convexity(pred, poset, poset.top(), below=poset.bottom())
    assert ref is not None, "wrochna certificate failed"
    # bottom is the unique minimum; full > (full - e) >= bottom with the
    # middle non-ternary shows the weak-heredity failure as well
    e = sorted(w.edges)[0]
    mid = poset.edge_element(w.edges - {e})
    assert not pred.eval(w, mid)
    verdicts = {p: False for p in PROPS}
    return [GroundVerdict(
        label="wrochna-15", verdicts=verdicts,
        witnesses={"convex": ref.element.describe(),
                   "weakly_hereditary": f"(top, {mid.describe()}, bottom)"},
        note="witness-based: the whole graph is locally edge-minimal ternary")]


def _special_g16(bounds) -> list[GroundVerdict]:
    g16 = gr.circulant(16, [1, 7, 8])
    pred = predicate("kernel-less")
    poset = GroundPoset(g16, VERTEX)
    below = poset.vertex_element({1, 2, 9, 10})
    ref = refute_convexity(pred, poset, poset.top(), below=below)
    assert ref is not None, "G16 certificate failed"
    # weak heredity: full > (full - v) >= {1,2,9,10} with the middle having
    # a kernel; the small witness is itself minimal
    assert find_member_strictly_below(pred, poset, below) is None
    mid = poset.vertex_element(set(range(1, 16)))
    assert not pred.eval(g16, mid)
    verdicts = {p: False for p in PROPS}
    return [GroundVerdict(
        label="circulant16(1,7,8)", verdicts=verdicts,
        witnesses={"convex": f"(top, {below.describe()})",
                   "weakly_hereditary": f"(top, {mid.describe()}, {below.describe()})"},
        note="witness-based: locally vertex-minimal kernel-less, not minimal")]


def _g43_odd_cycle_arcs() -> frozenset:
    """A 13-arc odd directed cycle of the 43-circulant avoiding arc (43,1):
    eight +1 steps then five +7 steps."""
    arcs = [(i, i + 1) for i in range(1, 9)]
    cur = 9
    for _ in range(5):
        nxt = (cur + 7 - 1) % 43 + 1
        arcs.append((cur, nxt))
        cur = nxt
    assert cur == 1
    return frozenset(arcs)


def _special_g43(bounds) -> list[GroundVerdict]:
    g43 = gr.circulant(43, [1, 7, 8])
    pred = predicate("kernel-less")
    poset = GroundPoset(g43, EDGE, cap=1 << 130)
    top = poset.top()
    assert is_local_minimum(pred, poset, top), "G43 is not locally edge-minimal"
    below = poset.edge_element(_g43_odd_cycle_arcs())
    assert pred.eval(g43, below)
    mid = poset.edge_element(g43.arcs - {(43, 1)})
    assert not pred.eval(g43, mid)
    assert poset.precedes(below, mid)
    verdicts = {p: False for p in PROPS}
    return [GroundVerdict(
        label="circulant43(1,7,8)", verdicts=verdicts,
        witnesses={"convex": "(top, 13-arc odd cycle)",
                   "weakly_hereditary": "(top, top minus (43,1), 13-arc odd cycle)"},
        note="witness-based: all 129 single-arc deletions gain kernels")]


# ---------------------------------------------------------------------------
# the catalog


def _E(name, kind, order, pred, expected, minima, universe, reference="", aliases=()):
    exp = dict(zip(PROPS, expected))
    return FamilyEntry(name=name, kind=kind, order=order, predicate=pred,
                       expected=exp, expected_minima=minima, universe=universe,
                       reference=reference, aliases=tuple(aliases))


T, F, U = True, False, UNVERIFIED

_ENTRIES = [
    _E("connected-graphs-vertex-order", "graph", VERTEX, "connected",
       (T, T, F, F), "the null graph only",
       "all labeled graphs on up to 5 vertices",
       aliases=("connected",)),
    _E("connected-graphs-edge-order", "graph", EDGE, "connected",
       (T, T, T, F), "the spanning trees of the ground",
       "all connected labeled graphs on up to 5 vertices"),
    _E("disconnected-graphs-vertex-order", "graph", VERTEX, "disconnected",
       (T, T, F, F), "pairs of non-adjacent vertices",
       "all labeled graphs on up to 5 vertices",
       aliases=("disconnected",)),
    _E("disconnected-graphs-edge-order", "graph", EDGE, "disconnected",
       (T, T, T, T), "the edge-free spanning subgraph",
       "all labeled graphs on up to 4 vertices"),
    _E("sc-digraphs-vertex-order", "digraph", VERTEX, "strongly-connected",
       (F, F, F, F), "the null graph only (conventional SC of trivial digraphs)",
       "all digraphs on up to 3 vertices, a directed 4-cycle, and two "
       "directed triangles sharing one vertex",
       aliases=("sc",)),
    _E("sc-digraphs-edge-order", "digraph", EDGE, "strongly-connected",
       (T, T, T, F), "arc-minimal strongly connected spanning subgraphs",
       "all SC digraphs on up to 3 vertices plus directed 4- and 5-cycles"),
    _E("not-sc-digraphs-vertex-order", "digraph", VERTEX, "not-strongly-connected",
       (T, T, F, F), "vertex pairs missing at least one of the two arcs",
       "all digraphs on up to 3 vertices plus a triangle with an isolated vertex",
       aliases=("not-sc",)),
    _E("not-sc-digraphs-edge-order", "digraph", EDGE, "not-strongly-connected",
       (T, T, T, T), "the arc-free spanning subgraph",
       "all digraphs on up to 3 vertices"),
    _E("ternary-graphs-vertex-order", "graph", VERTEX, "ternary",
       (T, T, T, T), "the null graph only",
       "all labeled graphs on up to 5 vertices",
       aliases=("ternary",)),
    _E("ternary-graphs-edge-order", "graph", EDGE, "ternary",
       (F, F, F, F), "the edge-free spanning subgraph",
       "all labeled graphs on up to 4 vertices plus the 15-vertex "
       "5-cycle/10-cycle join, where every edge deletion leaves the family",
       reference="Kral's question, refuted by Wrochna's construction"),
    _E("non-ternary-graphs-vertex-order", "graph", VERTEX, "non-ternary",
       (T, T, T, F), "induced cycles of length divisible by 3",
       "all labeled graphs on up to 5 vertices plus the 6-cycle and the cube"),
    _E("non-ternary-graphs-edge-order", "graph", EDGE, "non-ternary",
       (T, T, F, F), "cycles of length divisible by 3 plus isolated vertices",
       "all labeled graphs on up to 4 vertices, the 6-cycle, and a "
       "double-chorded 6-cycle (the weak-heredity counterexample)"),
    _E("perfect-graphs-vertex-order", "graph", VERTEX, "perfect",
       (T, T, T, T), "the null graph only",
       "all labeled graphs on up to 5 vertices"),
    _E("perfect-graphs-edge-order", "graph", EDGE, "perfect",
       (U, U, U, F), "unverified at desk scale",
       "all labeled graphs on up to 4 vertices plus the chorded 5-cycle "
       "(whose chord is its unique critical edge)",
       reference="convexity fails via graphs with every edge critical "
                 "(Rotterdam graphs), not constructible here"),
    _E("imperfect-graphs-vertex-order", "graph", VERTEX, "imperfect",
       (T, T, T, F), "odd holes and odd antiholes",
       "all labeled graphs on up to 5 vertices plus the 7-cycle and its complement",
       reference="minimality by the strong perfect graph theorem"),
    _E("imperfect-graphs-edge-order", "graph", EDGE, "imperfect",
       (T, T, F, F), "odd holes plus isolated vertices",
       "all labeled graphs on up to 5 vertices plus a 6-vertex ground with "
       "two odd holes sharing a chorded cycle",
       reference="minimality by Olaru's theorem; weak heredity fails on the "
                 "6-vertex ground despite the containment-family heuristic"),
    _E("chi-eq-omega-graphs-vertex-order", "graph", VERTEX, "chi-eq-omega",
       (T, T, F, F), "the null graph only",
       "all labeled graphs on up to 5 vertices plus a 5-cycle with an ear"),
    _E("chi-eq-omega-graphs-edge-order", "graph", EDGE, "chi-eq-omega",
       (T, T, F, F), "the edge-free spanning subgraph",
       "all labeled graphs on up to 4 vertices plus the chorded 5-cycle"),
    _E("chi-gt-omega-graphs-vertex-order", "graph", VERTEX, "chi-gt-omega",
       (F, F, F, F), "odd holes and odd antiholes; local minima are the "
       "partitionable graphs",
       "all labeled graphs on up to 5 vertices plus the circulant "
       "C10(1,2), a partitionable graph that is neither a hole nor an antihole",
       aliases=("chi-gt-omega",)),
    _E("chi-gt-omega-graphs-edge-order", "graph", EDGE, "chi-gt-omega",
       (F, F, F, F), "odd holes plus isolated vertices",
       "all labeled graphs on up to 4 vertices plus the 5-wheel, which is "
       "locally edge-minimal but not minimal",
       reference="the 5-wheel refutes convexity: deleting any edge restores "
                 "chi = omega, yet the bare 5-cycle sits strictly below"),
    _E("kernel-less-digraphs-vertex-order", "digraph", VERTEX, "kernel-less",
       (F, F, F, F), "hard to characterize; the audit only refutes convexity",
       "all digraphs on up to 3 vertices plus the 16-vertex circulant with "
       "jumps 1, 7, 8 (witness-based)",
       aliases=("kernel-less", "kernel-less-vertex-order")),
    _E("kernel-less-digraphs-edge-order", "digraph", EDGE, "kernel-less",
       (F, F, F, F), "odd directed cycles plus isolated vertices",
       "all digraphs on up to 3 vertices, a directed 5-cycle, and the "
       "43-vertex circulant with jumps 1, 7, 8 (witness-based)",
       aliases=("kernel-less-edge-order",),
       reference="the 43-circulant is locally edge-minimal kernel-less but "
                 "not minimal, refuting the stronger form of Richardson's theorem"),
    _E("has-kernel-digraphs-vertex-order", "digraph", VERTEX, "has-kernel",
       (T, T, F, F), "the null graph only",
       "all digraphs on up to 3 vertices plus a triangle with a tail",
       aliases=("has-kernel",)),
    _E("has-kernel-digraphs-edge-order", "digraph", EDGE, "has-kernel",
       (T, T, F, F), "the arc-free spanning subgraph",
       "all digraphs on up to 3 vertices plus a triangle with a tail"),
    _E("cc-dgraphs-vertex-order", "dgraph", VERTEX, "cc",
       (T, F, F, F), "the two minimal obstructions: the 2-colored P4-pair "
       "and the 3-colored triangle",
       "all complete colorings with up to 4 vertices and 3 colors, plus the "
       "P4-pair with another P4-pair substituted for its fourth vertex",
       aliases=("cc",)),
    _E("not-cc-dgraphs-vertex-order", "dgraph", VERTEX, "not-cc",
       (T, T, F, F), "the null coloring only",
       "all complete colorings with up to 4 vertices and 3 colors, plus the "
       "P4-pair extended by a monochromatic dominating vertex",
       aliases=("not-cc",)),
    _E("cis-dgraphs-vertex-order", "dgraph", VERTEX, "cis",
       (F, F, F, F), "the null coloring only",
       "all complete colorings with up to 3 vertices and 2 colors, the bull, "
       "and the rook's-graph pair on 9 vertices (locally minimal, not minimal)",
       aliases=("cis",)),
    _E("not-cis-dgraphs-vertex-order", "dgraph", VERTEX, "not-cis",
       (T, F, F, F), "the two minimal obstructions: the 2-colored P4-pair "
       "and the 3-colored triangle",
       "all complete colorings with up to 4 vertices and 3 colors, plus the "
       "bull with its nose replaced by a P4-pair and by a tricolored triangle",
       aliases=("not-cis",)),
    _E("pi-delta-free-dgraphs-vertex-order", "dgraph", VERTEX, "pi-delta-free",
       (T, T, T, T), "the null coloring only",
       "all complete colorings with up to 4 vertices and 3 colors",
       aliases=("pi-delta-free",)),
    _E("sp-free-matrices-line-order", "matrix", LINE, "sp-free",
       (T, F, F, F), "saddle-point-free 2x2 submatrices",
       "all matrices up to 2x3/3x2 over {0,1,2}, all 3x3 over {0,1}, and "
       "the 4x4 strong-convexity counterexample",
       aliases=("sp-free",),
       reference="minimality by Shapley's 2x2 criterion; convexity by the "
                 "deletion theorem for saddle-point-free matrices"),
    _E("has-sp-matrices-line-order", "matrix", LINE, "has-sp",
       (T, T, F, F), "the empty submatrix (it has a saddle point by convention)",
       "all matrices up to 2x3/3x2 over {0,1,2} plus the 2x3 matrix with "
       "two saddle points in its first column",
       aliases=("has-sp",)),
    _E("absolutely-determined-matrices-line-order", "matrix", LINE,
       "absolutely-determined",
       (T, T, T, T), "the empty submatrix",
       "all matrices up to 2x3/3x2 over {0,1,2} and all 3x3 over {0,1}",
       aliases=("absolutely-determined",)),
    _E("ne-free-bimatrix-line-order", "bimatrix", LINE, "ne-free",
       (F, F, F, F), "equilibrium-free subgames with no smaller ones inside; "
       "unlike saddle points these can exceed 2x2",
       "all 2x2 bimatrix games over {0,1}, the 3x3 cyclic instance, matching "
       "pennies, and a 4x4 locally minimal game holding an NE-free 2x2",
       aliases=("ne-free",)),
    _E("has-ne-bimatrix-line-order", "bimatrix", LINE, "has-ne",
       (T, T, F, F), "the empty subgame",
       "all 2x2 bimatrix games over {0,1} plus the zero-sum embedding of "
       "the two-saddle-point 2x3 matrix",
       aliases=("has-ne",)),
    _E("not-tight-gameforms-line-order", "gameform", LINE, "not-tight",
       (T, T, F, F), "the three 2x2 forms with disjoint diagonal outcome "
       "sets (2, 3, or 4 outcomes)",
       "all two-outcome forms up to 3x3, all 2x2 forms with up to 4 "
       "outcomes, and the 4x4 two-outcome weak-heredity counterexample",
       aliases=("not-tight", "not-tight-gameforms")),
    _E("tight-gameforms-line-order", "gameform", LINE, "tight",
       (U, U, U, F), "the empty subform; the locally minimal tight forms "
       "are unverified at desk scale (none exist up to 3x3 with 4 outcomes)",
       "the nine catalog forms as grounds",
       aliases=("tight",)),
    _E("totally-tight-gameforms-line-order", "gameform", LINE, "totally-tight",
       (T, T, T, T), "the empty subform",
       "all two-outcome forms up to 3x3 and all 2x2 forms with up to 4 outcomes",
       aliases=("totally-tight", "tt")),
    _E("not-totally-tight-gameforms-line-order", "gameform", LINE,
       "not-totally-tight",
       (T, T, T, F), "the three 2x2 forms with disjoint diagonal outcome sets",
       "all two-outcome forms up to 3x3 and all 2x2 forms with up to 4 outcomes",
       aliases=("not-totally-tight", "not-tt")),
]

_BY_NAME = {e.name: e for e in _ENTRIES}
_ALIASES = {}
for _e in _ENTRIES:
    for _a in set(_e.aliases) | {_e.predicate}:
        _ALIASES.setdefault(_a, [])
        if _e.name not in _ALIASES[_a]:
            _ALIASES[_a].append(_e.name)


def list_families() -> list[FamilyEntry]:
    return sorted(_ENTRIES, key=lambda e: e.name)


def get_entry(name: str, order: Optional[str] = None) -> FamilyEntry:
    if name in _BY_NAME:
        return _BY_NAME[name]
    cands = _ALIASES.get(name, [])
    if order is not None:
        cands = [c for c in cands if _BY_NAME[c].order == order]
    if len(cands) == 1:
        return _BY_NAME[cands[0]]
    if len(cands) > 1:
        raise KeyError(f"family {name!r} is ambiguous; pick an order from "
                       f"{sorted(_BY_NAME[c].order for c in cands)}")
    raise KeyError(f"unknown family {name!r}; known: "
                   + ", ".join(sorted(_BY_NAME) + sorted(_ALIASES)))


# ---------------------------------------------------------------------------
# per-entry universes, minima checks, special audits

_SIZES_2X3 = ((1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2))
_SIZES_3X3 = _SIZES_2X3 + ((1, 3), (3, 1), (3, 3))


def _grounds(entry: FamilyEntry, bounds: AuditBounds):
    name = entry.name
    if name == "connected-graphs-vertex-order":
        n = bounds.resolve(n=5)["n"]
        yield from _graphs_upto(n)
    elif name == "connected-graphs-edge-order":
        n = bounds.resolve(n=5)["n"]
        yield from _connected_graphs_upto(n)
    elif name == "disconnected-graphs-vertex-order":
        n = bounds.resolve(n=5)["n"]
        yield from _graphs_upto(n)
    elif name == "disconnected-graphs-edge-order":
        n = bounds.resolve(n=4)["n"]
        yield from _graphs_upto(n)
    elif name == "sc-digraphs-vertex-order":
        n = bounds.resolve(n=3)["n"]
        yield from _digraphs_upto(n)
        yield "directed-c4", gr.directed_cycle(4)
        yield "two-triangles", gr.two_triangles_shared_vertex()
    elif name == "sc-digraphs-edge-order":
        n = bounds.resolve(n=3)["n"]
        yield from _sc_digraphs_upto(n)
        yield "directed-c4", gr.directed_cycle(4)
        yield "directed-c5", gr.directed_cycle(5)
    elif name == "not-sc-digraphs-vertex-order":
        n = bounds.resolve(n=3)["n"]
        yield from _digraphs_upto(n)
        yield "c3-plus-isolated", _c3_plus_isolated()
    elif name == "not-sc-digraphs-edge-order":
        n = bounds.resolve(n=3)["n"]
        yield from _digraphs_upto(n)
    elif name == "ternary-graphs-vertex-order":
        n = bounds.resolve(n=5)["n"]
        yield from _graphs_upto(n)
    elif name == "ternary-graphs-edge-order":
        n = bounds.resolve(n=4)["n"]
        yield from _graphs_upto(n)
    elif name == "non-ternary-graphs-vertex-order":
        n = bounds.resolve(n=5)["n"]
        yield from _graphs_upto(n)
        yield "c6", gr.cycle(6)
        if bounds.slow:
            yield "cube", gr.cube()
    elif name == "non-ternary-graphs-edge-order":
        n = bounds.resolve(n=4)["n"]
        yield from _graphs_upto(n)
        yield "c6", gr.cycle(6)
        yield "c6-two-chords", _c6_two_chords()
    elif name == "perfect-graphs-vertex-order":
        n = bounds.resolve(n=5)["n"]
        yield from _graphs_upto(n)
    elif name == "perfect-graphs-edge-order":
        n = bounds.resolve(n=4)["n"]
        yield from _graphs_upto(n)
        yield "chorded-c5", gr.house_with_chord()
    elif name == "imperfect-graphs-vertex-order":
        n = bounds.resolve(n=5)["n"]
        yield from _graphs_upto(n)
        yield "c7", gr.cycle(7)
        yield "c7-complement", gr.complement(gr.cycle(7))
    elif name == "imperfect-graphs-edge-order":
        n = bounds.resolve(n=5)["n"]
        yield from _graphs_upto(n)
        yield "two-holes-chorded", _c5_chord_two_holes()
    elif name == "chi-eq-omega-graphs-vertex-order":
        n = bounds.resolve(n=5)["n"]
        yield from _graphs_upto(n)
        yield "c5-plus-ear", _c5_plus_ear()
    elif name == "chi-eq-omega-graphs-edge-order":
        n = bounds.resolve(n=4)["n"]
        yield from _graphs_upto(n)
        yield "chorded-c5", gr.house_with_chord()
    elif name == "chi-gt-omega-graphs-vertex-order":
        n = bounds.resolve(n=5)["n"]
        yield from _graphs_upto(n)
        yield "circulant10(1,2)", _undirected_circulant(10, (1, 2))
    elif name == "chi-gt-omega-graphs-edge-order":
        n = bounds.resolve(n=4)["n"]
        yield from _graphs_upto(n)
        yield "wheel5", _wheel5()
    elif name == "kernel-less-digraphs-vertex-order":
        n = bounds.resolve(n=3)["n"]
        yield from _digraphs_upto(n)
    elif name == "kernel-less-digraphs-edge-order":
        n = bounds.resolve(n=3)["n"]
        yield from _digraphs_upto(n)
        yield "directed-c5", gr.directed_cycle(5)
    elif name == "has-kernel-digraphs-vertex-order":
        n = bounds.resolve(n=3)["n"]
        yield from _digraphs_upto(n)
        yield "triangle-with-tail", _triangle_with_tail()
    elif name == "has-kernel-digraphs-edge-order":
        n = bounds.resolve(n=3)["n"]
        yield from _digraphs_upto(n)
        yield "triangle-with-tail", _triangle_with_tail()
    elif name in ("cc-dgraphs-vertex-order", "not-cc-dgraphs-vertex-order",
                  "not-cis-dgraphs-vertex-order",
                  "pi-delta-free-dgraphs-vertex-order"):
        vals = bounds.resolve(n=4, d=3)
        yield from _dgraphs_upto(vals["n"], vals["d"])
        if name == "cc-dgraphs-vertex-order":
            yield "pi-sub-pi", dg.pi_sub_pi()
        elif name == "not-cc-dgraphs-vertex-order":
            yield "pi-plus-dominating", dg.not_cc_extension(dg.pi())
        elif name == "not-cis-dgraphs-vertex-order":
            yield "bull-sub-pi", dg.bull_sub_pi()
            yield "bull-sub-delta", dg.bull_sub_delta()
    elif name == "cis-dgraphs-vertex-order":
        vals = bounds.resolve(n=3, d=2)
        yield from _dgraphs_upto(vals["n"], vals["d"])
        yield "bull", dg.bull()
        yield "rook33-pair", dg.line_knn_2graph(3)
    elif name == "sp-free-matrices-line-order":
        a = bounds.resolve(alphabet=3)["alphabet"]
        yield from _matrices(_SIZES_2X3, a)
        yield from _matrices(((3, 3),), 2)
        yield "sp-fixture-4x4", gm.sp_fixture_4x4()
    elif name == "has-sp-matrices-line-order":
        a = bounds.resolve(alphabet=3)["alphabet"]
        yield from _matrices(_SIZES_2X3, a)
        yield "two-sp-2x3", gm.two_sp_fixture_2x3()
    elif name == "absolutely-determined-matrices-line-order":
        a = bounds.resolve(alphabet=3)["alphabet"]
        yield from _matrices(_SIZES_2X3, a)
        yield from _matrices(((3, 3),), 2)
    elif name == "ne-free-bimatrix-line-order":
        yield from _bimatrices(((2, 2),), 2)
        yield "ne-free-3x3", gm.make_ne_free_3x3()
        yield "matching-pennies", gm.matching_pennies()
        yield "lm-not-min-4x4", ne_free_lm_not_min_4x4()
    elif name == "has-ne-bimatrix-line-order":
        yield from _bimatrices(((2, 2),), 2)
        yield "zero-sum-two-sp-2x3", gm.zero_sum(gm.two_sp_fixture_2x3())
    elif name == "not-tight-gameforms-line-order":
        yield from _gameforms(_SIZES_3X3, 2)
        yield from _gameforms(((2, 2),), 4)
        yield "ab-form-4x4", gm.ab_form_4x4()
    elif name == "tight-gameforms-line-order":
        for i, f in enumerate([gm.g1(), gm.g2(), gm.g3(), gm.g4(), gm.g5(),
                               gm.g6(), gm.g7(), gm.g8(), gm.g9()], 1):
            yield f"g{i}", f
    elif name in ("totally-tight-gameforms-line-order",
                  "not-totally-tight-gameforms-line-order"):
        yield from _gameforms(_SIZES_3X3, 2)
        yield from _gameforms(((2, 2),), 4)
    else:  # pragma: no cover
        raise KeyError(name)


_MINIMA_CHECKS: dict[str, Callable] = {
    "connected-graphs-vertex-order": _minima_all(_is_bottom),
    "connected-graphs-edge-order": _minima_all(_spanning_tree),
    "disconnected-graphs-vertex-order": _minima_all(_nonadjacent_pair),
    "disconnected-graphs-edge-order": _minima_all(_is_bottom),
    "sc-digraphs-vertex-order": _minima_all(_is_bottom),
    "not-sc-digraphs-vertex-order": _minima_all(_pair_missing_arc),
    "not-sc-digraphs-edge-order": _minima_all(_is_bottom),
    "ternary-graphs-vertex-order": _minima_all(_is_bottom),
    "ternary-graphs-edge-order": _minima_all(_is_bottom),
    "non-ternary-graphs-vertex-order": _minima_all(_induces_cycle_mod3),
    "non-ternary-graphs-edge-order": _minima_all(
        lambda g, m: _edges_cycle_plus_isolated(g, m, lambda k: k % 3 == 0)),
    "perfect-graphs-vertex-order": _minima_all(_is_bottom),
    "imperfect-graphs-vertex-order": _minima_all(_induces_hole_or_antihole),
    "imperfect-graphs-edge-order": _minima_all(
        lambda g, m: _edges_cycle_plus_isolated(g, m, lambda k: k >= 5 and k % 2 == 1)),
    "chi-eq-omega-graphs-vertex-order": _minima_all(_is_bottom),
    "chi-eq-omega-graphs-edge-order": _minima_all(_is_bottom),
    "chi-gt-omega-graphs-vertex-order": _minima_all(_induces_hole_or_antihole),
    "chi-gt-omega-graphs-edge-order": _minima_all(
        lambda g, m: _edges_cycle_plus_isolated(g, m, lambda k: k >= 5 and k % 2 == 1)),
    "kernel-less-digraphs-edge-order": _minima_all(_odd_directed_cycle_plus_isolated),
    "has-kernel-digraphs-vertex-order": _minima_all(_is_bottom),
    "has-kernel-digraphs-edge-order": _minima_all(_is_bottom),
    "cc-dgraphs-vertex-order": _minima_all(_induces_pi_or_delta),
    "not-cc-dgraphs-vertex-order": _minima_all(_is_bottom),
    "cis-dgraphs-vertex-order": _minima_all(_is_bottom),
    "not-cis-dgraphs-vertex-order": _minima_all(_induces_pi_or_delta),
    "pi-delta-free-dgraphs-vertex-order": _minima_all(_is_bottom),
    "sp-free-matrices-line-order": _minima_all(_sp_free_2x2),
    "has-sp-matrices-line-order": _minima_all(_is_bottom),
    "absolutely-determined-matrices-line-order": _minima_all(_is_bottom),
    "ne-free-bimatrix-line-order": _minima_all(_ne_free_cell),
    "has-ne-bimatrix-line-order": _minima_all(_is_bottom),
    "not-tight-gameforms-line-order": _minima_all(_catalog_2x2),
    "tight-gameforms-line-order": _minima_all(_is_bottom),
    "totally-tight-gameforms-line-order": _minima_all(_is_bottom),
    "not-totally-tight-gameforms-line-order": _minima_all(_catalog_2x2),
}

_SPECIALS: dict[str, Callable] = {
    "ternary-graphs-edge-order": _special_wrochna,
    "kernel-less-digraphs-vertex-order": _special_g16,
    "kernel-less-digraphs-edge-order": _special_g43,
}


# ---------------------------------------------------------------------------
# the audit driver


def _audit_ground(entry: FamilyEntry, label: str, ground) -> GroundVerdict:
    pred = predicate(entry.predicate)
    poset = GroundPoset(ground, entry.order)
    rep = classify(pred, poset)
    check = _MINIMA_CHECKS.get(entry.name)
    minima_ok = None if check is None else check(ground, rep.minima)
    witnesses = {k: _describe_witness(v) for k, v in rep.witnesses.items()}
    return GroundVerdict(label=label, verdicts=rep.verdicts(),
                         minima_ok=minima_ok, witnesses=witnesses)


def _describe_witness(w) -> str:
    if isinstance(w, PosetElement):
        return w.describe()
    if isinstance(w, tuple):
        return "(" + ", ".join(_describe_witness(x) for x in w) + ")"
    return str(w)


def audit_family(name: str, bounds: Optional[AuditBounds] = None,
                 order: Optional[str] = None, jobs: int = 1) -> AuditReport:
    entry = get_entry(name, order)
    bounds = bounds or AuditBounds()
    grounds = list(_grounds(entry, bounds))
    if jobs > 1 and len(grounds) > 64:
        results = _audit_parallel(entry, bounds, len(grounds), jobs)
    else:
        results = [_audit_ground(entry, label, g) for label, g in grounds]
    special = _SPECIALS.get(entry.name)
    if special is not None:
        results.extend(special(bounds))
    return _aggregate(entry, results)


def _aggregate(entry: FamilyEntry, results: list[GroundVerdict]) -> AuditReport:
    mismatches = []
    skipped = []
    for prop in PROPS:
        expected = entry.expected[prop]
        if expected == UNVERIFIED:
            skipped.append(prop)
            continue
        if expected:
            bad = [r.label for r in results if not r.verdicts[prop]]
            if bad:
                mismatches.append(
                    f"{prop}: expected to hold everywhere, fails on {bad[:3]}")
        else:
            if not any(not r.verdicts[prop] for r in results):
                mismatches.append(f"{prop}: expected a violating ground, found none")
    bad_minima = [r.label for r in results if r.minima_ok is False]
    if bad_minima:
        mismatches.append(f"minima shape check fails on {bad_minima[:3]}")
    return AuditReport(entry=entry, grounds=results, mismatches=mismatches,
                       skipped=skipped)


def _audit_chunk(args):
    name, bounds_dict, lo, hi = args
    bounds = AuditBounds(**bounds_dict)
    entry = get_entry(name)
    out = []
    for i, (label, g) in enumerate(_grounds(entry, bounds)):
        if lo <= i < hi:
            out.append(_audit_ground(entry, label, g))
    return out


def _audit_parallel(entry, bounds, total, jobs):
    import multiprocessing as mp

    bd = {"n": bounds.n, "d": bounds.d, "max_size": bounds.max_size,
          "alphabet": bounds.alphabet, "seed": bounds.seed, "slow": bounds.slow}
    step = max(1, (total + jobs - 1) // jobs)
    tasks = [(entry.name, bd, lo, min(lo + step, total))
             for lo in range(0, total, step)]
    with mp.Pool(processes=min(jobs, len(tasks))) as pool:
        chunks = pool.map(_audit_chunk, tasks)
    out = []
    for c in chunks:
        out.extend(c)
    return out


def audit_all(bounds: Optional[AuditBounds] = None, jobs: int = 1) -> list[AuditReport]:
    return [audit_family(e.name, bounds, jobs=jobs) for e in list_families()]


# ---------------------------------------------------------------------------
# golden serialization


def to_json() -> str:
    payload = []
    for e in list_families():
        payload.append({
            "name": e.name,
            "kind": e.kind,
            "order": e.order,
            "predicate": e.predicate,
            "expected": {p: e.expected[p] if e.expected[p] == UNVERIFIED
                         else bool(e.expected[p]) for p in PROPS},
            "expected_minima": e.expected_minima,
            "universe": e.universe,
            "reference": e.reference,
            "aliases": list(e.aliases),
        })
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def golden_path():
    from importlib.resources import files

    return files("convexfam").joinpath("data/registry.json")


def matches_golden() -> bool:
    return golden_path().read_text() == to_json()
