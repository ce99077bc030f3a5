"""Complete edge-colored graphs on {1..n} with colors {1..d}.

Every pair of distinct vertices carries exactly one color; a color class is
a chromatic component.  Components may be empty, so the 2-colored P4-pair
counts as a d-graph for every d >= 2.  The predicates here (complementary
connectedness, the common-vertex selection property, containment of the two
minimal obstructions) all work directly on vertex subsets of a host, which
keeps the exhaustive audits over all colorings cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graphs import Graph, GraphError, _bits, _connected_mask


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


class DGraph:
    """Complete edge-coloring of K_n by colors {1..d}."""

    __slots__ = ("n", "d", "colors", "_index", "_comp_adj", "_hash")

    def __init__(self, n: int, d: int, colors):
        """``colors`` maps every unordered pair to a color, either as a dict
        keyed by (u, v) pairs or as a flat sequence in lexicographic pair
        order."""
        if n < 0 or d < 1:
            raise GraphError("need n >= 0 and d >= 1")
        pairs = _pairs(n)
        if isinstance(colors, dict):
            flat = []
            seen = set()
            for (u, v) in pairs:
                c = colors.get((u, v), colors.get((v, u)))
                if c is None:
                    raise GraphError(f"pair ({u},{v}) has no color: coloring must be complete")
                flat.append(c)
                seen.add((u, v))
            extra = {tuple(sorted(k)) for k in colors} - set(pairs)
            if extra:
                raise GraphError(f"colored pairs outside the vertex set: {sorted(extra)}")
        else:
            flat = list(colors)
            if len(flat) != len(pairs):
                raise GraphError(
                    f"expected {len(pairs)} pair colors for n={n}, got {len(flat)}")
        for c in flat:
            if not isinstance(c, int) or not 1 <= c <= d:
                raise GraphError(f"color {c!r} outside 1..{d}")
        self.n = n
        self.d = d
        self.colors = tuple(flat)
        self._index = {p: i for i, p in enumerate(pairs)}
        # per color, per vertex adjacency bitmasks
        comp = [[0] * (n + 1) for _ in range(d + 1)]
        for (u, v), c in zip(pairs, flat):
            comp[c][u] |= 1 << (v - 1)
            comp[c][v] |= 1 << (u - 1)
        self._comp_adj = tuple(tuple(a) for a in comp)
        self._hash = hash((n, d, self.colors))

    def __eq__(self, other):
        return (isinstance(other, DGraph) and self.n == other.n
                and self.d == other.d and self.colors == other.colors)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        trip = [(u, v, c) for (u, v), c in zip(_pairs(self.n), self.colors)]
        return f"DGraph(n={self.n}, d={self.d}, edges={trip})"

    def color_of(self, u: int, v: int) -> int:
        if u == v:
            raise GraphError("no loops in a complete coloring")
        key = (u, v) if u < v else (v, u)
        return self.colors[self._index[key]]

    def component(self, c: int) -> Graph:
        """Chromatic component c as a plain graph on the full vertex set."""
        return Graph(self.n, [p for p, col in zip(_pairs(self.n), self.colors) if col == c])

    def component_adj(self, c: int) -> tuple:
        return self._comp_adj[c]

    def used_colors(self) -> set[int]:
        return set(self.colors)

    def vertices(self) -> range:
        return range(1, self.n + 1)


# ---------------------------------------------------------------------------
# constructors


def sub_dgraph(g: DGraph, vertex_set: Iterable[int]) -> DGraph:
    """Induced complete coloring on a vertex subset, relabeled in id order."""
    vs = sorted(set(vertex_set))
    for v in vs:
        if not 1 <= v <= g.n:
            raise GraphError(f"vertex {v} outside the host")
    flat = [g.color_of(u, v) for u, v in combinations(vs, 2)]
    return DGraph(len(vs), g.d, flat)


def substitute(host: DGraph, v: int, inner: DGraph, d: Optional[int] = None) -> DGraph:
    """Replace vertex v of the host by the whole of ``inner``.

    Host vertices other than v keep their relative order and come first;
    inner vertices follow.  Cross edges take the color the host gave to
    (v, w); inner edges keep their colors.  Colors of host and inner are
    read over a common palette 1..d (default: the larger of the two)."""
    if not 1 <= v <= host.n:
        raise GraphError(f"vertex {v} outside the host")
    d = d if d is not None else max(host.d, inner.d)
    if d < host.d or d < inner.d:
        raise GraphError("palette too small for the substitution")
    outer = [u for u in host.vertices() if u != v]
    total = len(outer) + inner.n
    pos = {}
    for i, u in enumerate(outer):
        pos[("h", u)] = i + 1
    for i in range(1, inner.n + 1):
        pos[("i", i)] = len(outer) + i
    colors = {}
    for a, b in combinations(outer, 2):
        colors[(pos[("h", a)], pos[("h", b)])] = host.color_of(a, b)
    for a, b in combinations(range(1, inner.n + 1), 2):
        colors[(pos[("i", a)], pos[("i", b)])] = inner.color_of(a, b)
    for a in outer:
        for b in range(1, inner.n + 1):
            colors[tuple(sorted((pos[("h", a)], pos[("i", b)])))] = host.color_of(a, v)
    return DGraph(total, d, colors)


def project(g: DGraph, blocks: Sequence[Iterable[int]]) -> DGraph:
    """Merge color classes: block i of the partition becomes color i+1."""
    cover = []
    seen = set()
    for blk in blocks:
        s = set(blk)
        if not s:
            raise GraphError("projection blocks must be nonempty")
        if s & seen:
            raise GraphError("projection blocks must be disjoint")
        seen |= s
        cover.append(s)
    if seen != set(range(1, g.d + 1)):
        raise GraphError("projection blocks must cover the palette exactly")
    newc = {}
    for i, blk in enumerate(cover):
        for c in blk:
            newc[c] = i + 1
    return DGraph(g.n, len(cover), [newc[c] for c in g.colors])


def dgraph_from_graph(g: Graph) -> DGraph:
    """The 2-graph whose color-1 component is g and color-2 its complement."""
    flat = [1 if g.has_edge(u, v) else 2 for u, v in _pairs(g.n)]
    return DGraph(g.n, 2, flat)


# ---------------------------------------------------------------------------
# predicates


def _cc_on_subset(g: DGraph, vmask: int, nv: int) -> bool:
    """Complementary connectedness of the sub-coloring induced on vmask."""
    if nv <= 1:
        return False  # null and one-vertex colorings are not CC by convention
    for c in range(1, g.d + 1):
        adj = g._comp_adj[c]
        # complement of component c inside vmask must be connected
        if not _complement_connected(adj, vmask, g.n):
            return False
    return True


def _complement_connected(adj: Sequence[int], vmask: int, n: int) -> bool:
    start = vmask & -vmask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= vmask & ~adj[v] & ~(1 << (v - 1))
        frontier = nxt & ~seen
        seen |= frontier
    return seen == vmask


def is_cc(g: DGraph) -> bool:
    """Complement of every chromatic component connected on the whole vertex
    set; null and one-vertex colorings are not CC."""
    return cc_on_vertices(g, range(1, g.n + 1))


def cc_on_vertices(g: DGraph, vertex_set: Iterable[int]) -> bool:
    vmask = 0
    nv = 0
    for v in vertex_set:
        vmask |= 1 << (v - 1)
        nv += 1
    return _cc_on_subset(g, vmask, nv)


def contains_pi(g: DGraph) -> Optional[tuple]:
    """A 4-set inducing a 2-colored pair of complementary 4-paths, if any."""
    return pi_witness_on(g, range(1, g.n + 1))


def pi_witness_on(g: DGraph, vertex_set: Iterable[int]) -> Optional[tuple]:
    vs = sorted(vertex_set)
    for quad in combinations(vs, 4):
        cols = {}
        for u, v in combinations(quad, 2):
            cols.setdefault(g.color_of(u, v), []).append((u, v))
        if len(cols) != 2:
            continue
        part = next(iter(cols.values()))
        if len(part) == 3 and _is_p4(part, quad):
            return quad
    return None


def _is_p4(edges: list, quad: tuple) -> bool:
    # 3 edges on 4 vertices form a path iff connected with max degree 2
    deg = {v: 0 for v in quad}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if sorted(deg.values()) != [1, 1, 2, 2]:
        return False
    adj = {v: set() for v in quad}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = set()
    stack = [edges[0][0]]
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        stack.extend(adj[x])
    return len(seen) == 4


def contains_delta(g: DGraph) -> Optional[tuple]:
    """A triangle with three pairwise distinct colors, if any."""
    return delta_witness_on(g, range(1, g.n + 1))


def delta_witness_on(g: DGraph, vertex_set: Iterable[int]) -> Optional[tuple]:
    vs = sorted(vertex_set)
    for a, b, c in combinations(vs, 3):
        if len({g.color_of(a, b), g.color_of(b, c), g.color_of(a, c)}) == 3:
            return (a, b, c)
    return None


def is_pi(g: DGraph) -> bool:
    return g.n == 4 and pi_witness_on(g, range(1, 5)) == (1, 2, 3, 4)


def is_delta(g: DGraph) -> bool:
    return g.n == 3 and delta_witness_on(g, range(1, 4)) == (1, 2, 3)


# -- CIS ---------------------------------------------------------------------


@dataclass(frozen=True)
class Selection:
    """One maximal independent set per color, and their intersection."""

    sets: tuple  # sets[i] is the choice for color i+1, as a frozenset
    common: frozenset

    def verify(self, g: DGraph) -> bool:
        if len(self.sets) != g.d:
            return False
        inter = frozenset(g.vertices()) if g.n else frozenset()
        for c, s in enumerate(self.sets, start=1):
            if not _is_maximal_independent(g, c, s):
                return False
            inter &= s
        return inter == self.common


def _is_maximal_independent(g: DGraph, c: int, s: Iterable[int]) -> bool:
    sm = 0
    for v in s:
        sm |= 1 << (v - 1)
    adj = g._comp_adj[c]
    for v in _bits(sm):
        if adj[v] & sm:
            return False
    full = (1 << g.n) - 1
    for v in _bits(full & ~sm):
        if not adj[v] & sm:
            return False  # v could be added
    return True


def maximal_independent_sets(g: DGraph, c: int) -> list[int]:
    """All maximal independent sets of chromatic component c, as bitmasks."""
    n = g.n
    adj = g._comp_adj[c]
    full = (1 << n) - 1
    out = []

    def extend(cur: int, cand: int, excluded: int) -> None:
        if not cand and not excluded:
            out.append(cur)
            return
        pool = cand | excluded
        pivot = (pool & -pool).bit_length()
        # Bron-Kerbosch on the complement: branch on non-neighbours of pivot
        branch = cand & ~(~adj[pivot] & ~(1 << (pivot - 1)))
        if not branch:
            branch = cand
        for v in _bits(branch):
            vb = 1 << (v - 1)
            nonadj = full & ~adj[v] & ~vb
            extend(cur | vb, cand & nonadj, excluded & nonadj)
            cand &= ~vb
            excluded |= vb

    if n == 0:
        return [0]
    extend(0, full, 0)
    return out


def is_cis(g: DGraph) -> tuple[bool, Optional[Selection]]:
    """Does every selection of one maximal independent set per color have a
    common vertex?  On failure the empty-intersection selection is returned.

    The null coloring counts as CIS (there is nothing to select from)."""
    if g.n == 0:
        return True, None
    per_color = [maximal_independent_sets(g, c) for c in range(1, g.d + 1)]
    order = sorted(range(g.d), key=lambda i: len(per_color[i]))
    chosen = [0] * g.d

    def search(i: int, inter: int) -> Optional[list]:
        if inter == 0:
            # any completion witnesses the failure
            for j in range(i, g.d):
                chosen[order[j]] = per_color[order[j]][0]
            return chosen
        if i == g.d:
            return None
        for s in per_color[order[i]]:
            chosen[order[i]] = s
            got = search(i + 1, inter & s)
            if got is not None:
                return got
        return None

    got = search(0, (1 << g.n) - 1)
    if got is None:
        return True, None
    sets = tuple(frozenset(_bits(m)) for m in got)
    common = frozenset.intersection(*sets) if sets else frozenset()
    return False, Selection(sets=sets, common=common)


def cis_on_vertices(g: DGraph, vertex_set: Iterable[int]) -> bool:
    return is_cis(sub_dgraph(g, vertex_set))[0]


# ---------------------------------------------------------------------------
# fixtures


def pi(d: int = 2) -> DGraph:
    """The 4-vertex 2-colored pair of complementary paths (colors 1 and 2)."""
    if d < 2:
        raise GraphError("needs at least two colors")
    colors = {(1, 2): 1, (2, 3): 1, (3, 4): 1, (2, 4): 2, (1, 4): 2, (1, 3): 2}
    return DGraph(4, d, colors)


def delta(d: int = 3, palette: tuple = (1, 2, 3)) -> DGraph:
    """The 3-colored triangle; ``palette`` picks the three colors."""
    a, b, c = palette
    if len({a, b, c}) != 3:
        raise GraphError("the triangle needs three distinct colors")
    if d < max(palette):
        raise GraphError("palette exceeds the color count")
    return DGraph(3, d, {(1, 2): a, (2, 3): b, (1, 3): c})


def bull() -> DGraph:
    """Self-complementary 5-vertex 2-graph; vertices 1..4 induce the
    4-path pair and vertex 5 is the nose."""
    c1 = [(1, 2), (2, 3), (3, 4), (2, 5), (3, 5)]
    colors = {}
    for u, v in _pairs(5):
        colors[(u, v)] = 1 if ((u, v) in c1 or (v, u) in c1) else 2
    return DGraph(5, 2, colors)


def bull_sub_pi() -> DGraph:
    """Bull with its nose vertex replaced by a fresh 4-path pair: vertices
    1..4 are the original ones, 5..8 the substituted copy."""
    return substitute(bull(), 5, pi())


def bull_sub_delta(palette: tuple = (3, 4, 5)) -> DGraph:
    """Bull with the nose replaced by a 3-colored triangle; the triangle
    colors are a parameter (fresh colors by default, but any work)."""
    d = max(2, *palette)
    return substitute(bull(), 5, delta(d=d, palette=palette), d=d)


def line_knn_2graph(n: int) -> DGraph:
    """2-graph of the line graph of K_{n,n} and its complement.  Vertex
    (i-1)*n+j stands for the cell (i, j); color 1 joins cells sharing a row
    or a column."""
    pairs = {}
    for u, v in _pairs(n * n):
        ru, cu = divmod(u - 1, n)
        rv, cv = divmod(v - 1, n)
        pairs[(u, v)] = 1 if (ru == rv or cu == cv) else 2
    return DGraph(n * n, 2, pairs)


def pi_sub_pi() -> DGraph:
    """The 7-vertex 2-graph obtained by substituting a fresh 4-path pair for
    the fourth vertex of another: vertices 1..3 original, 4..7 the copy."""
    return substitute(pi(), 4, pi())


def not_cc_extension(base: DGraph, color: int = 1) -> DGraph:
    """Add a dominating vertex joined to everything in one color."""
    n = base.n
    colors = {}
    for u, v in _pairs(n):
        colors[(u, v)] = base.color_of(u, v)
    for u in range(1, n + 1):
        colors[(u, n + 1)] = color
    return DGraph(n + 1, base.d, colors)


# ---------------------------------------------------------------------------
# exhaustive enumeration and the open-conjecture search


def all_dgraphs(n: int, d: int):
    """All complete colorings of K_n with colors drawn from {1..d}."""
    from itertools import product

    k = len(_pairs(n))
    for flat in product(range(1, d + 1), repeat=k):
        yield DGraph(n, d, list(flat))


@dataclass(frozen=True)
class DeltaSearchReport:
    n_max: int
    colorings_checked: int
    complete: bool
    counterexamples: tuple


def delta_conjecture_search(n_max: int, budget: Optional[int] = None) -> DeltaSearchReport:
    """Look for a 3-colored coloring that contains a tricolored triangle yet
    has the common-vertex selection property.

    Every such coloring is isomorphic to one whose triangle sits on vertices
    {1,2,3} with colors 1,2,3 in canonical position, so only the remaining
    pairs are enumerated.  Finding nothing up to n_max is the expected
    outcome; the question is open."""
    from itertools import product

    checked = 0
    hits = []
    complete = True
    for n in range(3, n_max + 1):
        fixed = {(1, 2): 1, (2, 3): 2, (1, 3): 3}
        rest = [p for p in _pairs(n) if p not in fixed]
        for assign in product((1, 2, 3), repeat=len(rest)):
            if budget is not None and checked >= budget:
                return DeltaSearchReport(n_max, checked, False, tuple(hits))
            checked += 1
            colors = dict(fixed)
            colors.update(zip(rest, assign))
            g = DGraph(n, 3, colors)
            ok, _ = is_cis(g)
            if ok:
                hits.append(g)
    return DeltaSearchReport(n_max, checked, complete, tuple(hits))
