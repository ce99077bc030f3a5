"""Independent brute-force oracles used to pin expected values.

Everything here goes straight from the definitions by exhaustive
enumeration, deliberately ignoring the smarter algorithms in the package,
so the two routes stay independent.
"""

from itertools import combinations, permutations, product

from convexfam.graphs import Graph, induced_subgraph


def chi_bruteforce(g) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for assign in product(range(k), repeat=g.n):
            if all(assign[u - 1] != assign[v - 1] for u, v in g.edges):
                return k
    return g.n


def omega_bruteforce(g) -> int:
    best = 0
    for r in range(g.n + 1):
        for s in combinations(range(1, g.n + 1), r):
            if all(g.has_edge(u, v) for u, v in combinations(s, 2)):
                best = r
    return best


def induced_cycle_sets(g) -> set:
    """Vertex sets inducing a chordless cycle: the induced subgraph is
    connected and 2-regular."""
    out = set()
    for k in range(3, g.n + 1):
        for s in combinations(range(1, g.n + 1), k):
            sub = induced_subgraph(g, s)
            if sub.m == k and all(sub.degree(v) == 2 for v in sub.vertices()):
                if _connected_bool(sub):
                    out.add(frozenset(s))
    return out


def _connected_bool(g) -> bool:
    if g.n <= 1:
        return True
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in g.vertices():
            if g.has_edge(v, u) and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def all_kernels_bruteforce(d) -> list:
    out = []
    for r in range(d.n + 1):
        for s in combinations(range(1, d.n + 1), r):
            ss = set(s)
            if any(u in ss and v in ss for (u, v) in d.arcs):
                continue
            if all(any((v, w) in d.arcs for w in ss)
                   for v in range(1, d.n + 1) if v not in ss):
                out.append(frozenset(s))
    return out


def directed_cycles_bruteforce(d) -> set:
    out = set()
    for k in range(2, d.n + 1):
        for s in combinations(range(1, d.n + 1), k):
            for perm in permutations(s[1:]):
                cyc = (s[0],) + perm
                if all(d.has_arc(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    out.add(cyc)
    return out


def maximal_independent_sets_bruteforce(g) -> set:
    out = set()
    for r in range(g.n + 1):
        for s in combinations(range(1, g.n + 1), r):
            if any(g.has_edge(u, v) for u, v in combinations(s, 2)):
                continue
            if all(any(g.has_edge(v, u) for u in s)
                   for v in range(1, g.n + 1) if v not in s):
                out.add(frozenset(s))
    return out


def saddle_points_bruteforce(a) -> set:
    out = set()
    nr, nc = len(a), len(a[0]) if a else 0
    for i in range(nr):
        for j in range(nc):
            x = a[i][j]
            if all(x <= a[i][jj] for jj in range(nc)) and \
               all(x >= a[ii][j] for ii in range(nr)):
                out.add((i + 1, j + 1))
    return out


def minimal_transversals(sets, universe) -> set:
    """All inclusion-minimal subsets of the universe hitting every set."""
    universe = list(universe)
    transversals = []
    for r in range(len(universe) + 1):
        for cand in combinations(universe, r):
            cs = set(cand)
            if all(cs & s for s in sets):
                if not any(t < cs for t in transversals):
                    transversals.append(frozenset(cs))
    return {t for t in transversals
            if not any(o < t for o in transversals)}


def tight_by_duality(form) -> bool:
    """Tightness via hypergraph duality: the minimal column outcome sets
    must be exactly the minimal transversals of the row outcome sets."""
    rows = [frozenset(r) for r in form.outcomes]
    cols = [frozenset(form.outcomes[i][j] for i in range(form.n_rows))
            for j in range(form.n_cols)]
    if not rows or not cols:
        return True
    universe = set().union(*rows) | set().union(*cols)
    min_rows = {r for r in rows if not any(o < r for o in rows)}
    min_cols = {c for c in cols if not any(o < c for o in cols)}
    return min_cols == minimal_transversals(min_rows, universe) and \
        min_rows == minimal_transversals(min_cols, universe)


def spanning_trees_bruteforce(g) -> set:
    out = set()
    edges = sorted(g.edges)
    want = max(g.n - 1, 0)
    for s in combinations(edges, want):
        sub = Graph(g.n, s)
        if _connected_bool(sub):
            out.add(frozenset(s))
    return out
