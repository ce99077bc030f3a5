"""Exact chromatic and clique numbers, perfection, and related predicates.

Everything here is exponential and intended for small graphs (n up to about
12 for one-off calls).  For the exhaustive scans over every labeled graph on
a fixed small vertex set there are memoized per-n tables of chi, omega and
perfection, computed once per process; the scans in the audit and acceptance
suites rely on them heavily.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .graphs import (
    Graph,
    GraphError,
    _bits,
    all_cycles,
    chord_count,
    complement,
    delete_edge,
    delete_vertex,
    has_chordless_cycle,
)


def clique_number(g: Graph) -> int:
    """Exact omega via branch and bound over candidate bitmasks."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 1

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            b = cand & -cand
            v = b.bit_length()
            cand ^= b
            ns = size + 1
            if ns > best:
                best = ns
            expand(cand & adj[v], ns)

    expand((1 << g.n) - 1, 0)
    return best


def max_clique(g: Graph) -> frozenset:
    """Some maximum clique (lexicographically first found)."""
    if g.n == 0:
        return frozenset()
    adj = g.adj
    best_set = [1 << 0]
    best = [1]

    def expand(cur: int, cand: int) -> None:
        size = cur.bit_count()
        if size + cand.bit_count() <= best[0]:
            return
        if not cand:
            if size > best[0]:
                best[0] = size
                best_set[0] = cur
            return
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            b = cand & -cand
            v = b.bit_length()
            cand ^= b
            expand(cur | b, cand & adj[v])

    expand(0, (1 << g.n) - 1)
    return frozenset(_bits(best_set[0]))


def _greedy_chi(g: Graph) -> int:
    order = sorted(g.vertices(), key=lambda v: -g.degree(v))
    colors: dict[int, int] = {}
    for v in order:
        used = {colors[u] for u in _bits(g.adj[v]) if u in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return 1 + max(colors.values()) if colors else 0


def chromatic_number(g: Graph) -> int:
    """Exact chi: branch and bound with a clique lower bound and a greedy
    upper bound; vertices colored in degree order."""
    n = g.n
    if n == 0:
        return 0
    if not g.edges:
        return 1
    lower = clique_number(g)
    upper = _greedy_chi(g)
    if lower == upper:
        return lower
    adj = g.adj
    order = sorted(g.vertices(), key=lambda v: -g.degree(v))
    best = upper
    coloring = [0] * (n + 1)  # 0 = uncolored, colors 1..k

    def rec(idx: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if idx == n:
            best = used
            return
        v = order[idx]
        seen = 0
        for u in _bits(adj[v]):
            seen |= 1 << coloring[u] if coloring[u] else 0
        for c in range(1, used + 1):
            if not (seen >> c) & 1:
                coloring[v] = c
                rec(idx + 1, used)
                coloring[v] = 0
        if used + 1 < best:
            coloring[v] = used + 1
            rec(idx + 1, used + 1)
            coloring[v] = 0

    rec(0, 0)
    return max(best, lower)


def is_perfect_bruteforce(g: Graph, cap: int = 9) -> bool:
    """chi = omega on every induced subgraph, checked literally."""
    if g.n > cap:
        raise GraphError(f"brute-force perfection capped at {cap} vertices")
    verts = list(g.vertices())
    from .graphs import induced_subgraph

    for k in range(g.n + 1):
        for s in combinations(verts, k):
            sub = induced_subgraph(g, s)
            if chromatic_number(sub) != clique_number(sub):
                return False
    return True


def has_odd_hole(g: Graph) -> bool:
    """An induced odd cycle of length at least 5."""
    return has_chordless_cycle(g, lambda L: L >= 5 and L % 2 == 1)


def is_perfect_spgt(g: Graph) -> bool:
    """Perfection via the strong perfect graph theorem: neither the graph
    nor its complement has an induced odd cycle of length >= 5."""
    return not has_odd_hole(g) and not has_odd_hole(complement(g))


def is_perfect(g: Graph) -> bool:
    return is_perfect_spgt(g)


def is_partitionable(g: Graph) -> bool:
    """chi > omega but deleting any one vertex restores chi = omega."""
    if chromatic_number(g) <= clique_number(g):
        return False
    for v in g.vertices():
        sub = delete_vertex(g, v)
        if chromatic_number(sub) != clique_number(sub):
            return False
    return True


def is_meyniel(g: Graph) -> bool:
    """Every odd cycle of length 5 or more (induced or not) has at least two
    chords."""
    for cyc in all_cycles(g):
        if len(cyc) >= 5 and len(cyc) % 2 == 1 and chord_count(g, cyc) < 2:
            return False
    return True


def critical_edges(g: Graph) -> frozenset:
    """Edges of a perfect graph whose deletion makes it imperfect."""
    if not is_perfect_spgt(g):
        raise GraphError("critical_edges is defined for perfect graphs only")
    return frozenset(e for e in g.edges if not is_perfect_spgt(delete_edge(g, e)))


# ---------------------------------------------------------------------------
# per-n tables over every labeled graph on {1..n}
#
# Graphs are keyed by their edge bitmask over the lexicographic pair list
# (1,2),(1,3),...,(n-1,n).  The perfection table is built bottom-up: a graph
# is perfect iff chi = omega and each one-vertex-deleted subgraph is perfect,
# which keeps the per-graph work polynomial given the smaller tables.


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple:
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict:
    return {p: i for i, p in enumerate(pair_list(n))}


def mask_of_graph(g: Graph) -> int:
    idx = _pair_index(g.n)
    m = 0
    for e in g.edges:
        m |= 1 << idx[e]
    return m


def graph_of_mask(n: int, mask: int) -> Graph:
    pairs = pair_list(n)
    return Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


@lru_cache(maxsize=None)
def delete_vertex_mask_map(n: int, v: int) -> tuple:
    """For each edge position of an n-graph, its position in the (n-1)-graph
    obtained by deleting vertex v (or -1 if the edge dies)."""
    pairs = pair_list(n)
    relabel = {u: u - (1 if u > v else 0) for u in range(1, n + 1)}
    small = _pair_index(n - 1)
    out = []
    for (a, b) in pairs:
        if v in (a, b):
            out.append(-1)
        else:
            out.append(small[(relabel[a], relabel[b])])
    return tuple(out)


def project_mask(n: int, mask: int, v: int) -> int:
    """Edge mask of the graph with vertex v deleted (vertices relabeled)."""
    mp = delete_vertex_mask_map(n, v)
    out = 0
    i = 0
    while mask:
        if mask & 1:
            j = mp[i]
            if j >= 0:
                out |= 1 << j
        mask >>= 1
        i += 1
    return out


@lru_cache(maxsize=None)
def chi_omega_table(n: int) -> tuple:
    """(chi[], omega[]) over all 2^C(n,2) labeled graphs on {1..n}."""
    pairs = pair_list(n)
    total = 1 << len(pairs)
    chi = bytearray(total)
    omega = bytearray(total)
    for mask in range(total):
        g = graph_of_mask(n, mask)
        omega[mask] = clique_number(g)
        chi[mask] = chromatic_number(g)
    return bytes(chi), bytes(omega)


@lru_cache(maxsize=None)
def perfect_table(n: int) -> bytes:
    """perfect[mask] over all labeled graphs on {1..n}, built bottom-up from
    chi = omega and the (n-1)-vertex table."""
    if n == 0:
        return bytes([1])
    chi, omega = chi_omega_table(n)
    smaller = perfect_table(n - 1)
    total = len(chi)
    out = bytearray(total)
    maps = [delete_vertex_mask_map(n, v) for v in range(1, n + 1)]
    for mask in range(total):
        if chi[mask] != omega[mask]:
            continue
        ok = True
        for mp in maps:
            sm = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    j = mp[i]
                    if j >= 0:
                        sm |= 1 << j
                m >>= 1
                i += 1
            if not smaller[sm]:
                ok = False
                break
        if ok:
            out[mask] = 1
    return bytes(out)


def table_is_perfect(g: Graph) -> bool:
    return perfect_table(g.n)[mask_of_graph(g)] == 1


def table_chi_omega(g: Graph) -> tuple[int, int]:
    chi, omega = chi_omega_table(g.n)
    m = mask_of_graph(g)
    return chi[m], omega[m]
