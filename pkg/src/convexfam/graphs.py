"""Labeled graphs and digraphs on vertex set {1..n}, plus the fixture zoo.

Vertices are integers 1..n.  Undirected edges are stored as sorted pairs,
arcs as ordered pairs; loops are rejected and parallel edges collapse.
Adjacency is kept as per-vertex bitmasks (bit v-1 for vertex v), which keeps
the exhaustive scans elsewhere in the package fast without any C extension.

All algorithms are exact; the exponential ones (chordless-cycle enumeration,
spanning-subgraph scans) are meant for desk-scale instances.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph constructions or invalid sub-object requests."""


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or not 1 <= v <= n:
        raise GraphError(f"vertex {v!r} outside 1..{n}")


def _bits(mask: int) -> Iterator[int]:
    """Yield 1-based vertex ids set in a bitmask."""
    while mask:
        b = mask & -mask
        yield b.bit_length()
        mask ^= b


def _popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Simple undirected graph on {1..n}."""

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise GraphError(f"loop at vertex {u} is forbidden")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)
        adj = [0] * (n + 1)
        for u, v in norm:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        self.adj = tuple(adj)
        self._hash = hash((n, self.edges))

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        es = sorted(self.edges)
        return f"Graph(n={self.n}, edges={es})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> (v - 1)) & 1 == 1

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


class Digraph:
    """Directed graph on {1..n}: no loops, at most one arc per ordered pair."""

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "_hash")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        norm = set()
        for u, v in arcs:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise GraphError(f"loop at vertex {u} is forbidden")
            norm.add((u, v))
        self.n = n
        self.arcs = frozenset(norm)
        out_adj = [0] * (n + 1)
        in_adj = [0] * (n + 1)
        for u, v in norm:
            out_adj[u] |= 1 << (v - 1)
            in_adj[v] |= 1 << (u - 1)
        self.out_adj = tuple(out_adj)
        self.in_adj = tuple(in_adj)
        self._hash = hash((n, self.arcs))

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_arc(self, u: int, v: int) -> bool:
        return (self.out_adj[u] >> (v - 1)) & 1 == 1

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


# ---------------------------------------------------------------------------
# sub-object constructors


def induced_subgraph(g, vertex_set: Iterable[int]):
    """Induced subgraph on a vertex subset, relabeled to {1..k} in id order.

    Works for both Graph and Digraph.  Raises GraphError if the subset
    mentions vertices outside the host.
    """
    vs = sorted(set(vertex_set))
    for v in vs:
        _check_vertex(v, g.n)
    relabel = {v: i + 1 for i, v in enumerate(vs)}
    keep = set(vs)
    if isinstance(g, Digraph):
        arcs = [(relabel[u], relabel[v]) for u, v in g.arcs if u in keep and v in keep]
        return Digraph(len(vs), arcs)
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in keep and v in keep]
    return Graph(len(vs), edges)


def spanning_subgraph(g, edge_set):
    """Subgraph on the full vertex set with the given subset of edges/arcs."""
    if isinstance(g, Digraph):
        es = set(edge_set)
        if not es <= g.arcs:
            raise GraphError("edge subset contains arcs not present in the host")
        return Digraph(g.n, es)
    es = {(u, v) if u < v else (v, u) for u, v in edge_set}
    if not es <= g.edges:
        raise GraphError("edge subset contains edges not present in the host")
    return Graph(g.n, es)


def delete_vertex(g, v: int):
    return induced_subgraph(g, [u for u in g.vertices() if u != v])


def delete_edge(g, e):
    if isinstance(g, Digraph):
        return Digraph(g.n, g.arcs - {tuple(e)})
    u, v = e
    key = (u, v) if u < v else (v, u)
    return Graph(g.n, g.edges - {key})


def reverse(d: Digraph) -> Digraph:
    """The digraph with every arc flipped."""
    return Digraph(d.n, [(v, u) for (u, v) in d.arcs])


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u, v in combinations(range(1, g.n + 1), 2)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of g (in sorted edge order)."""
    es = g.sorted_edges()
    edges = [
        (i + 1, j + 1)
        for i, j in combinations(range(len(es)), 2)
        if set(es[i]) & set(es[j])
    ]
    return Graph(len(es), edges)


# ---------------------------------------------------------------------------
# connectivity


def is_connected(g: Graph) -> bool:
    """Every two distinct vertices joined by a path.

    The null graph and one-vertex graphs are connected: they have no two
    distinct vertices to separate.
    """
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _connected_mask(g.adj, full)


def _connected_mask(adj: Sequence[int], vm: int) -> bool:
    """Is the subgraph induced on bitmask ``vm`` connected (vm nonempty)?"""
    start = vm & -vm
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v] & vm
        frontier = nxt & ~seen
        seen |= frontier
    return seen == vm


def is_strongly_connected(d: Digraph) -> bool:
    """Every ordered pair of distinct vertices joined by a directed path.

    Mirrors the undirected convention: null and one-vertex digraphs are SC.
    """
    if d.n <= 1:
        return True
    full = (1 << d.n) - 1
    return _reaches_all(d.out_adj, full) and _reaches_all(d.in_adj, full)


def _reaches_all(adj: Sequence[int], vm: int) -> bool:
    start = vm & -vm
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v] & vm
        frontier = nxt & ~seen
        seen |= frontier
    return seen == vm


def is_acyclic(d: Digraph) -> bool:
    """No directed cycle (checked by repeatedly stripping sinks)."""
    alive = (1 << d.n) - 1
    changed = True
    while alive and changed:
        changed = False
        for v in _bits(alive):
            if d.out_adj[v] & alive == 0:
                alive &= ~(1 << (v - 1))
                changed = True
    return alive == 0


# ---------------------------------------------------------------------------
# cycle machinery


def chordless_cycles(g: Graph, max_len: Optional[int] = None) -> list[tuple[int, ...]]:
    """All induced (chordless) cycles of length >= 3, one canonical tuple each.

    A cycle is reported as (s, a, ..., b) where s is its smallest vertex and
    a < b, which fixes rotation and reflection.
    """
    out: list[tuple[int, ...]] = []
    _scan_chordless(g, max_len, None, out)
    return out


def has_chordless_cycle(g: Graph, length_pred, max_len: Optional[int] = None) -> bool:
    """Does g contain an induced cycle whose length satisfies length_pred?"""
    hit: list[tuple[int, ...]] = []
    _scan_chordless(g, max_len, length_pred, hit)
    return bool(hit)


def _scan_chordless(g: Graph, max_len, stop_pred, out: list) -> None:
    """Walk induced paths s, v1, ..., vk with s the smallest vertex.

    ``banned`` holds the joint neighbourhood of the interior vertices
    v1..v_{k-1}; a candidate adjacent to any of them would be a chord.  A
    candidate adjacent to s closes a cycle and is never extended further
    (extending past it would leave the chord to s).  Reflections are killed
    by requiring v1 < closing vertex.
    """
    n = g.n
    adj = g.adj
    limit = max_len if max_len is not None else n

    for s in range(1, n + 1):
        smask = 1 << (s - 1)
        higher = ~((1 << s) - 1)  # vertices > s

        def extend(path: list[int], pathmask: int, banned: int) -> bool:
            last = path[-1]
            cand = adj[last] & higher & ~pathmask & ~banned
            for u in _bits(cand):
                if adj[u] & smask:
                    length = len(path) + 1
                    if length >= 3 and length <= limit and path[1] < u:
                        cyc = (s, *path[1:], u)
                        if stop_pred is None:
                            out.append(cyc)
                        elif stop_pred(length):
                            out.append(cyc)
                            return True
                elif len(path) + 1 < limit:
                    if extend(path + [u], pathmask | (1 << (u - 1)),
                              banned | adj[last]):
                        return True
            return False

        for v in _bits(adj[s] & higher):
            if extend([s, v], smask | (1 << (v - 1)), 0):
                return


def induced_cycle_lengths(g: Graph) -> set[int]:
    return {len(c) for c in chordless_cycles(g)}


def is_ternary(g: Graph) -> bool:
    """No induced cycle of length divisible by 3."""
    return not has_chordless_cycle(g, lambda L: L % 3 == 0)


def all_cycles(g: Graph, max_len: Optional[int] = None) -> list[tuple[int, ...]]:
    """All (not necessarily induced) simple cycles, canonically rotated."""
    out: list[tuple[int, ...]] = []
    n = g.n
    adj = g.adj
    limit = max_len if max_len is not None else n
    for s in range(1, n + 1):
        smask = 1 << (s - 1)
        higher = ~((1 << s) - 1)

        def extend(path: list[int], pathmask: int) -> None:
            last = path[-1]
            for u in _bits(adj[last] & higher & ~pathmask):
                if adj[u] & smask and len(path) >= 2 and path[1] < u \
                        and len(path) + 1 <= limit:
                    out.append((s, *path[1:], u))
                if len(path) + 1 < limit:
                    extend(path + [u], pathmask | (1 << (u - 1)))

        for v in _bits(adj[s] & higher):
            extend([s, v], smask | (1 << (v - 1)))
    return out


def chord_count(g: Graph, cycle: Sequence[int]) -> int:
    """Number of chords the host graph puts on the given simple cycle."""
    k = len(cycle)
    cons = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    chords = 0
    for u, v in combinations(cycle, 2):
        if g.has_edge(u, v) and frozenset((u, v)) not in cons:
            chords += 1
    return chords


def directed_cycles(d: Digraph, max_len: Optional[int] = None) -> list[tuple[int, ...]]:
    """All simple directed cycles, each reported once starting at its
    smallest vertex."""
    out: list[tuple[int, ...]] = []
    n = d.n
    adj = d.out_adj
    limit = max_len if max_len is not None else n
    for s in range(1, n + 1):
        smask = 1 << (s - 1)
        higher = ~((1 << s) - 1)

        def extend(path: list[int], pathmask: int) -> None:
            last = path[-1]
            cand = adj[last]
            if cand & smask and len(path) >= 2 and len(path) <= limit:
                out.append(tuple(path))
            for u in _bits(cand & higher & ~pathmask):
                if len(path) < limit:
                    extend(path + [u], pathmask | (1 << (u - 1)))

        extend([s], smask)
    return out


def directed_cycle_lengths(d: Digraph) -> set[int]:
    return {len(c) for c in directed_cycles(d)}


def all_directed_cycles_even(d: Digraph) -> bool:
    """True iff every directed cycle has even length.

    Equivalent to every strongly connected component admitting a parity
    2-labeling where each internal arc flips parity; checked by BFS so the
    test does not depend on cycle enumeration.
    """
    for comp in strongly_connected_components(d):
        if len(comp) == 1:
            continue
        parity = {}
        root = comp[0]
        compset = set(comp)
        parity[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for u in _bits(d.out_adj[v]):
                if u not in compset:
                    continue
                want = parity[v] ^ 1
                if u in parity:
                    if parity[u] != want:
                        return False
                else:
                    parity[u] = want
                    queue.append(u)
            for u in _bits(d.in_adj[v]):
                if u not in compset:
                    continue
                want = parity[v] ^ 1
                if u in parity:
                    if parity[u] != want:
                        return False
                else:
                    parity[u] = want
                    queue.append(u)
    return True


def strongly_connected_components(d: Digraph) -> list[list[int]]:
    """Tarjan SCCs, iterative, components listed in discovery order."""
    n = d.n
    index = {}
    low = {}
    on_stack = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = [0]

    for root in range(1, n + 1):
        if root in index:
            continue
        work = [(root, iter(list(_bits(d.out_adj[root]))))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for u in it:
                if u not in index:
                    index[u] = low[u] = counter[0]
                    counter[0] += 1
                    stack.append(u)
                    on_stack.add(u)
                    work.append((u, iter(list(_bits(d.out_adj[u])))))
                    advanced = True
                    break
                elif u in on_stack:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# fixtures


def null_graph() -> Graph:
    return Graph(0)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise GraphError("directed cycle needs at least 2 vertices")
    return Digraph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def directed_path(n: int) -> Digraph:
    return Digraph(n, [(i, i + 1) for i in range(1, n)])


def two_triangles_shared_vertex() -> Digraph:
    """Two directed 3-cycles sharing exactly one vertex (vertex 3)."""
    return Digraph(5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])


def cube() -> Graph:
    """Skeleton of the 3-cube: vertices 1..8 code binary triples 0..7."""
    edges = []
    for u in range(8):
        for bit in range(3):
            v = u ^ (1 << bit)
            if u < v:
                edges.append((u + 1, v + 1))
    return Graph(8, edges)


def wrochna() -> Graph:
    """Disjoint 5-cycle and 10-cycle with each 5-cycle vertex joined to two
    opposite vertices of the 10-cycle, in cyclic order.

    Vertices 1..10 form the 10-cycle (u_1..u_10), vertices 11..15 the
    5-cycle (w_1..w_5); going around in order, w_c is joined to u_c and to
    the vertex opposite it, u_{c+5}.  15 vertices and 25 edges.  This is the
    alignment that actually has the advertised property: the graph has no
    induced cycle of length divisible by 3, yet deleting any single edge
    creates one.
    """
    edges = [(i, i % 10 + 1) for i in range(1, 11)]
    edges += [(10 + c, 10 + c % 5 + 1) for c in range(1, 6)]
    for c in range(1, 6):
        edges += [(10 + c, c), (10 + c, c + 5)]
    return Graph(15, edges)


def icosahedron() -> Graph:
    """Combinatorial icosahedron: apex 1, upper ring 2..6, lower ring 7..11,
    bottom apex 12."""
    edges = []
    up = [2, 3, 4, 5, 6]
    low = [7, 8, 9, 10, 11]
    for i in range(5):
        edges.append((1, up[i]))
        edges.append((12, low[i]))
        edges.append((up[i], up[(i + 1) % 5]))
        edges.append((low[i], low[(i + 1) % 5]))
        edges.append((up[i], low[i]))
        edges.append((up[(i + 1) % 5], low[i]))
    return Graph(12, edges)


def icosidodecahedron() -> Graph:
    """Rectified icosahedron: one vertex per icosahedron edge, adjacent when
    two edges lie consecutively on a common triangular face.  30 vertices,
    60 edges, 4-regular."""
    ico = icosahedron()
    es = ico.sorted_edges()
    idx = {e: i + 1 for i, e in enumerate(es)}
    edges = set()
    for u, v, w in combinations(range(1, 13), 3):
        if ico.has_edge(u, v) and ico.has_edge(v, w) and ico.has_edge(u, w):
            tri = [idx[tuple(sorted((u, v)))], idx[tuple(sorted((v, w)))],
                   idx[tuple(sorted((u, w)))]]
            for a, b in combinations(tri, 2):
                edges.add((min(a, b), max(a, b)))
    return Graph(30, edges)


def circulant(n: int, gens: Sequence[int]) -> Digraph:
    """Circulant digraph on {1..n} with arcs i -> i + g (mod n) for each
    generator g.  A generator congruent to 0 mod n would be a loop and is
    rejected."""
    if n < 1:
        raise GraphError("circulant needs at least one vertex")
    arcs = []
    for g in gens:
        if g % n == 0:
            raise GraphError(f"generator {g} is 0 mod {n}: loop")
        for i in range(1, n + 1):
            j = (i + g - 1) % n + 1
            arcs.append((i, j))
    return Digraph(n, arcs)


def house_with_chord() -> Graph:
    """Five-cycle 1..5 plus the chord (1,3): a perfect graph whose unique
    critical edge is (1,3)."""
    return Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)])


# ---------------------------------------------------------------------------
# enumeration helpers used by audits and tests


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on {1..n}."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every labeled digraph on {1..n} (no loops)."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    for mask in range(1 << len(pairs)):
        yield Digraph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def graph_from_mask(n: int, mask: int, pairs: Optional[list] = None) -> Graph:
    if pairs is None:
        pairs = list(combinations(range(1, n + 1), 2))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
