"""Kernels of digraphs: independent dominating sets with arcs pointing in.

A kernel K of a digraph satisfies (i) no arc joins two members of K and
(ii) every vertex outside K has an arc into K.  Recognition is NP-complete,
so the solver is a plain backtracking search over vertices in id order with
independence and dominatability pruning, guarded by an optional node budget.
Budget exhaustion yields an explicit "undecided" result, never a silent
false negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import Digraph, GraphError, _bits

FOUND = "found"
NONE = "none"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class KernelCertificate:
    """Evidence that a vertex set is a kernel.

    ``domination`` maps each outside vertex v to an arc (v, v') with v' in
    the kernel; independence holds because no arc joins kernel members,
    recorded as the (empty) list of violating arcs.
    """

    kernel: frozenset
    domination: dict

    def verify(self, d: Digraph) -> bool:
        k = self.kernel
        for u in k:
            if d.out_adj[u] & _mask(k):
                return False
        for v in d.vertices():
            if v in k:
                continue
            arc = self.domination.get(v)
            if arc is None or arc[0] != v or arc[1] not in k or arc not in d.arcs:
                return False
        return True


@dataclass(frozen=True)
class KernelSearchResult:
    status: str  # FOUND | NONE | UNDECIDED
    kernel: Optional[frozenset]
    nodes: int

    def __bool__(self):
        return self.status == FOUND


@dataclass(frozen=True)
class KernelCountResult:
    count: int
    complete: bool
    nodes: int


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << (v - 1)
    return m


def is_kernel(d: Digraph, k: Iterable[int]) -> bool:
    return kernel_certificate(d, k) is not None


def kernel_certificate(d: Digraph, k: Iterable[int]) -> Optional[KernelCertificate]:
    """Check the kernel conditions and, on success, return the certificate."""
    ks = frozenset(k)
    for v in ks:
        if not 1 <= v <= d.n:
            raise GraphError(f"vertex {v} outside the digraph")
    km = _mask(ks)
    for u in ks:
        if d.out_adj[u] & km:
            return None  # arc inside K
    domination = {}
    for v in d.vertices():
        if v in ks:
            continue
        into = d.out_adj[v] & km
        if not into:
            return None
        w = (into & -into).bit_length()
        domination[v] = (v, w)
    return KernelCertificate(kernel=ks, domination=domination)


def _search(d: Digraph, budget: Optional[int], count_all: bool):
    """Backtracking core.  Vertices are decided in id order; a vertex joins
    K only if no neighbour (either direction) is already in K, and every
    vertex decided out of K must keep at least one undecided-or-kernel
    out-neighbour to dominate it."""
    n = d.n
    full = (1 << n) - 1
    out_adj = d.out_adj
    in_adj = d.in_adj
    kernels = []
    nodes = 0
    exhausted = False

    def rec(v: int, kmask: int, outmask: int) -> bool:
        # returns True when the search should stop early
        nonlocal nodes, exhausted
        nodes += 1
        if budget is not None and nodes > budget:
            exhausted = True
            return True
        undecided = full & ~((1 << (v - 1)) - 1) if v <= n else 0
        # every out-of-kernel vertex must still be dominatable
        pending = outmask
        while pending:
            b = pending & -pending
            u = b.bit_length()
            pending ^= b
            if out_adj[u] & kmask:
                continue  # already dominated
            if not out_adj[u] & undecided:
                return False  # dead: u can never be dominated
        if v > n:
            kernels.append(kmask)
            return not count_all
        bit = 1 << (v - 1)
        # branch 1: v in K (if independent from current K)
        if not (out_adj[v] | in_adj[v]) & kmask:
            if rec(v + 1, kmask | bit, outmask):
                return True
        # branch 2: v out of K
        if rec(v + 1, kmask, outmask | bit):
            return True
        return False

    rec(1, 0, 0)
    return kernels, nodes, exhausted


def find_kernel(d: Digraph, budget: Optional[int] = None) -> KernelSearchResult:
    """Find some kernel, prove none exists, or report the budget ran out."""
    kernels, nodes, exhausted = _search(d, budget, count_all=False)
    if kernels:
        k = frozenset(_bits(kernels[0]))
        return KernelSearchResult(FOUND, k, nodes)
    if exhausted:
        return KernelSearchResult(UNDECIDED, None, nodes)
    return KernelSearchResult(NONE, None, nodes)


def count_kernels(d: Digraph, budget: Optional[int] = None) -> KernelCountResult:
    """Exact kernel count; ``complete`` is False when the budget ran out."""
    kernels, nodes, exhausted = _search(d, budget, count_all=True)
    return KernelCountResult(len(kernels), not exhausted, nodes)


def all_kernels(d: Digraph, budget: Optional[int] = None) -> list[frozenset]:
    kernels, nodes, exhausted = _search(d, budget, count_all=True)
    if exhausted:
        raise GraphError("kernel enumeration budget exhausted")
    return [frozenset(_bits(k)) for k in kernels]


def has_kernel(d: Digraph, budget: Optional[int] = None) -> bool:
    """Convenience wrapper; raises if the search came back undecided."""
    res = find_kernel(d, budget)
    if res.status == UNDECIDED:
        raise GraphError("kernel search budget exhausted: undecided")
    return res.status == FOUND
