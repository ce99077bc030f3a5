"""Finite containment posets and the convexity/heredity classification engine.

Ground objects (graphs, digraphs, complete edge-colored graphs, matrices,
bimatrix games, game forms) induce three orders:

* ``vertex``: induced sub-objects, one per vertex subset;
* ``edge``:   spanning sub-objects, one per edge/arc subset;
* ``line``:   submatrices, one per (row subset, column subset) pair, with
  every pair having an empty side identified into a single bottom element.

A family is a pure boolean predicate over (ground, element).  The engine
enumerates the whole poset (refusing beyond a hard cap rather than
truncating), computes minima and local minima by two different recursions,
and decides convexity, strong convexity, weak heredity and heredity with
explicit, deterministically chosen witnesses.

For grounds too large to enumerate there are witness-based helpers
(`is_local_minimum`, `find_member_strictly_below`, `refute_convexity`) that
certify membership in LM \\ M without touching the full poset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Optional

VERTEX = "vertex"
EDGE = "edge"
LINE = "line"

DEFAULT_CAP = 1 << 20


class PosetError(ValueError):
    pass


class PosetSizeError(PosetError):
    """The poset is larger than the caller-supplied enumeration cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"poset has {count} elements, above the cap of {cap}")
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class PosetElement:
    """A labeled sub-object handle: vertex subset, edge subset, or a pair of
    row/column subsets (with the all-empty line element as the bottom)."""

    kind: str  # "vertex-subset" | "edge-subset" | "line-subset"
    vertices: frozenset = frozenset()
    edges: frozenset = frozenset()
    rows: frozenset = frozenset()
    cols: frozenset = frozenset()

    def rank(self) -> int:
        if self.kind == "vertex-subset":
            return len(self.vertices)
        if self.kind == "edge-subset":
            return len(self.edges)
        return len(self.rows) + len(self.cols)

    def sort_key(self):
        if self.kind == "vertex-subset":
            return (self.rank(), tuple(sorted(self.vertices)))
        if self.kind == "edge-subset":
            return (self.rank(), tuple(sorted(self.edges)))
        return (self.rank(), tuple(sorted(self.rows)), tuple(sorted(self.cols)))

    def describe(self) -> str:
        if self.kind == "vertex-subset":
            return "V{" + ",".join(map(str, sorted(self.vertices))) + "}"
        if self.kind == "edge-subset":
            return "E{" + ",".join(map(str, sorted(self.edges))) + "}"
        if not self.rows and not self.cols:
            return "empty"
        return (
            "R{" + ",".join(map(str, sorted(self.rows))) + "}xC{"
            + ",".join(map(str, sorted(self.cols))) + "}"
        )

    def __repr__(self):
        return f"<{self.describe()}>"


@dataclass(frozen=True)
class FamilyPredicate:
    """A named, pure membership test over (ground, element)."""

    name: str
    eval: Callable[[object, PosetElement], bool]

    def __call__(self, ground, elem: PosetElement) -> bool:
        return bool(self.eval(ground, elem))


def _ground_vertex_ids(ground) -> list[int]:
    n = getattr(ground, "n", None)
    if n is None:
        raise PosetError(f"{type(ground).__name__} has no vertex set")
    return list(range(1, n + 1))


def _ground_edge_ids(ground) -> list[tuple]:
    if hasattr(ground, "arcs"):
        return sorted(ground.arcs)
    if hasattr(ground, "edges"):
        return sorted(ground.edges)
    raise PosetError(f"{type(ground).__name__} has no edge set")


def _is_grid(ground) -> bool:
    return hasattr(ground, "n_rows") and hasattr(ground, "n_cols")


class GroundPoset:
    """A ground object together with one of the three containment orders."""

    def __init__(self, ground, order: str, cap: int = DEFAULT_CAP):
        if order not in (VERTEX, EDGE, LINE):
            raise PosetError(f"unknown order {order!r}")
        is_dgraph = hasattr(ground, "color_of")
        if order == LINE and not _is_grid(ground):
            raise PosetError("line order needs a matrix, bimatrix or game form")
        if order != LINE and _is_grid(ground):
            raise PosetError("grids are ordered by rows/columns only")
        if order == EDGE and is_dgraph:
            raise PosetError("edge order makes no sense for complete colorings")
        if order == EDGE and not (hasattr(ground, "edges") or hasattr(ground, "arcs")):
            raise PosetError("edge order needs a graph or digraph")
        if order == VERTEX and not hasattr(ground, "n"):
            raise PosetError("vertex order needs an object with vertices")
        self.ground = ground
        self.order = order
        self.cap = cap
        if order == VERTEX:
            self._base = _ground_vertex_ids(ground)
        elif order == EDGE:
            self._base = _ground_edge_ids(ground)
        else:
            self._base = None
        if order == LINE:
            self._nrows = ground.n_rows
            self._ncols = ground.n_cols
            self._base_set = frozenset()
            self._full_vertices = frozenset()
        else:
            self._base_set = frozenset(self._base)
            self._full_vertices = frozenset(range(1, ground.n + 1))

    # -- basic geometry ----------------------------------------------------

    @property
    def kind(self) -> str:
        return {VERTEX: "vertex-subset", EDGE: "edge-subset", LINE: "line-subset"}[self.order]

    def element_count(self) -> int:
        if self.order == VERTEX:
            return 1 << len(self._base)
        if self.order == EDGE:
            return 1 << len(self._base)
        return ((1 << self._nrows) - 1) * ((1 << self._ncols) - 1) + 1

    def check_cap(self) -> None:
        c = self.element_count()
        if c > self.cap:
            raise PosetSizeError(c, self.cap)

    def top(self) -> PosetElement:
        if self.order == VERTEX:
            return self.vertex_element(self._base)
        if self.order == EDGE:
            return self.edge_element(self._base)
        return self.line_element(range(1, self._nrows + 1), range(1, self._ncols + 1))

    def bottom(self) -> PosetElement:
        if self.order == VERTEX:
            return self.vertex_element(())
        if self.order == EDGE:
            return self.edge_element(())
        return PosetElement(kind="line-subset")

    # -- element constructors with validation ------------------------------

    def vertex_element(self, vs) -> PosetElement:
        vs = frozenset(vs)
        if not vs <= self._base_set:
            raise PosetError(f"vertex ids {sorted(vs - self._base_set)} outside the ground")
        return PosetElement(kind="vertex-subset", vertices=vs)

    def edge_element(self, es) -> PosetElement:
        es = frozenset(tuple(e) for e in es)
        if not es <= self._base_set:
            raise PosetError("edge ids outside the ground")
        return PosetElement(kind="edge-subset", vertices=self._full_vertices, edges=es)

    def line_element(self, rows, cols) -> PosetElement:
        rows = frozenset(rows)
        cols = frozenset(cols)
        if not rows or not cols:
            # anything with an empty side is the empty submatrix
            return PosetElement(kind="line-subset")
        if not all(1 <= r <= self._nrows for r in rows):
            raise PosetError("row ids outside the ground")
        if not all(1 <= c <= self._ncols for c in cols):
            raise PosetError("column ids outside the ground")
        return PosetElement(kind="line-subset", rows=rows, cols=cols)

    def validate(self, elem: PosetElement) -> None:
        if elem.kind != self.kind:
            raise PosetError(f"element kind {elem.kind} does not live in the {self.order} order")
        if self.order == VERTEX:
            if not elem.vertices <= self._base_set:
                raise PosetError("element references vertices outside the ground")
        elif self.order == EDGE:
            if not elem.edges <= self._base_set:
                raise PosetError("element references edges outside the ground")
            if elem.vertices != self._full_vertices:
                raise PosetError("edge-subset elements keep the full vertex set")
        else:
            if bool(elem.rows) != bool(elem.cols):
                raise PosetError("line elements with one empty side are the empty element")
            if not all(1 <= r <= self._nrows for r in elem.rows):
                raise PosetError("element references rows outside the ground")
            if not all(1 <= c <= self._ncols for c in elem.cols):
                raise PosetError("element references columns outside the ground")

    # -- order relations ----------------------------------------------------

    def precedes(self, a: PosetElement, b: PosetElement) -> bool:
        """a is contained in b (a comes weakly below b in the order)."""
        if a.kind != b.kind:
            raise PosetError(f"cannot compare {a.kind} with {b.kind}")
        self.validate(a)
        self.validate(b)
        if self.order == VERTEX:
            return a.vertices <= b.vertices
        if self.order == EDGE:
            return a.edges <= b.edges
        if not a.rows and not a.cols:
            return True
        if not b.rows and not b.cols:
            return False
        return a.rows <= b.rows and a.cols <= b.cols

    def strictly_precedes(self, a: PosetElement, b: PosetElement) -> bool:
        return a != b and self.precedes(a, b)

    def immediate_successors(self, elem: PosetElement) -> list[PosetElement]:
        """Covering elements below: drop one vertex, one edge, or one line.

        In the line order the empty element covers nothing and is covered
        exactly by the 1x1 submatrices; a 1xk element's covers are its
        1x(k-1) subforms (the empty element sits strictly below those)."""
        self.validate(elem)
        out: list[PosetElement] = []
        if self.order == VERTEX:
            for v in sorted(elem.vertices):
                out.append(PosetElement(kind=self.kind, vertices=elem.vertices - {v}))
            return out
        if self.order == EDGE:
            for e in sorted(elem.edges):
                out.append(
                    PosetElement(kind=self.kind, vertices=elem.vertices,
                                 edges=elem.edges - {e}))
            return out
        if not elem.rows:
            return []
        if len(elem.rows) == 1 and len(elem.cols) == 1:
            return [PosetElement(kind=self.kind)]
        if len(elem.rows) > 1:
            for r in sorted(elem.rows):
                out.append(PosetElement(kind=self.kind, rows=elem.rows - {r}, cols=elem.cols))
        if len(elem.cols) > 1:
            for c in sorted(elem.cols):
                out.append(PosetElement(kind=self.kind, rows=elem.rows, cols=elem.cols - {c}))
        return out

    def immediate_predecessors(self, elem: PosetElement) -> list[PosetElement]:
        self.validate(elem)
        out: list[PosetElement] = []
        if self.order == VERTEX:
            for v in self._base:
                if v not in elem.vertices:
                    out.append(PosetElement(kind=self.kind, vertices=elem.vertices | {v}))
            return out
        if self.order == EDGE:
            for e in self._base:
                if e not in elem.edges:
                    out.append(PosetElement(kind=self.kind, vertices=elem.vertices,
                                            edges=elem.edges | {e}))
            return out
        if not elem.rows:
            return [self.line_element([r], [c])
                    for r in range(1, self._nrows + 1)
                    for c in range(1, self._ncols + 1)]
        for r in range(1, self._nrows + 1):
            if r not in elem.rows:
                out.append(PosetElement(kind=self.kind, rows=elem.rows | {r}, cols=elem.cols))
        for c in range(1, self._ncols + 1):
            if c not in elem.cols:
                out.append(PosetElement(kind=self.kind, rows=elem.rows, cols=elem.cols | {c}))
        return out

    # -- enumeration ---------------------------------------------------------

    def iter_elements(self) -> Iterator[PosetElement]:
        """All poset elements (cap-checked), in no particular order."""
        self.check_cap()
        if self.order in (VERTEX, EDGE):
            base = self._base
            k = len(base)
            for mask in range(1 << k):
                members = [base[i] for i in range(k) if (mask >> i) & 1]
                if self.order == VERTEX:
                    yield PosetElement(kind=self.kind, vertices=frozenset(members))
                else:
                    yield PosetElement(kind=self.kind, vertices=self._full_vertices,
                                       edges=frozenset(members))
            return
        yield PosetElement(kind=self.kind)
        rows = range(1, self._nrows + 1)
        cols = range(1, self._ncols + 1)
        for nr in range(1, self._nrows + 1):
            for rs in combinations(rows, nr):
                for nc in range(1, self._ncols + 1):
                    for cs in combinations(cols, nc):
                        yield PosetElement(kind=self.kind,
                                           rows=frozenset(rs), cols=frozenset(cs))

    def elements(self) -> list[PosetElement]:
        return sorted(self.iter_elements(), key=PosetElement.sort_key)


# ---------------------------------------------------------------------------
# module-level operation wrappers (the engine proper)


def immediate_successors(elem: PosetElement, poset: GroundPoset) -> list[PosetElement]:
    return poset.immediate_successors(elem)


def precedes(a: PosetElement, b: PosetElement, poset: GroundPoset) -> bool:
    return poset.precedes(a, b)


class _Scan:
    """One full membership scan of a poset, shared by the classification
    routines.  Elements are held in canonical (rank, ids) order; minima come
    from a downward recursion over covers, so tests can cross-check them
    against the quadratic definition."""

    def __init__(self, pred: FamilyPredicate, poset: GroundPoset):
        poset.check_cap()
        self.pred = pred
        self.poset = poset
        self.elements = poset.elements()
        self.index = {e: i for i, e in enumerate(self.elements)}
        g = poset.ground
        self.member = [bool(pred.eval(g, e)) for e in self.elements]
        self.succ = [
            [self.index[s] for s in poset.immediate_successors(e)]
            for e in self.elements
        ]
        # has_member_below via ascending-rank recursion (covers suffice:
        # every strict successor is reachable along a chain of covers)
        n = len(self.elements)
        hb = [False] * n
        for i in range(n):  # canonical order is ascending rank
            hb[i] = any(self.member[j] or hb[j] for j in self.succ[i])
        self.has_member_below = hb
        self.minima_idx = [i for i in range(n) if self.member[i] and not hb[i]]
        self.local_minima_idx = [
            i for i in range(n)
            if self.member[i] and not any(self.member[j] for j in self.succ[i])
        ]

    def minima(self) -> list[PosetElement]:
        return [self.elements[i] for i in self.minima_idx]

    def local_minima(self) -> list[PosetElement]:
        return [self.elements[i] for i in self.local_minima_idx]

    def min_below_or_equal(self) -> list[bool]:
        n = len(self.elements)
        mins = set(self.minima_idx)
        mb = [False] * n
        for i in range(n):
            mb[i] = i in mins or any(mb[j] for j in self.succ[i])
        return mb

    def family_above(self) -> list[bool]:
        n = len(self.elements)
        pred_idx = [[] for _ in range(n)]
        for i in range(n):
            for j in self.succ[i]:
                pred_idx[j].append(i)
        fa = [False] * n
        for i in range(n - 1, -1, -1):  # descending rank
            fa[i] = any(self.member[p] or fa[p] for p in pred_idx[i])
        return fa


def minima(pred: FamilyPredicate, poset: GroundPoset) -> list[PosetElement]:
    """Family members with no family member strictly below them."""
    return _Scan(pred, poset).minima()


def local_minima(pred: FamilyPredicate, poset: GroundPoset) -> list[PosetElement]:
    """Family members none of whose immediate successors is in the family."""
    return _Scan(pred, poset).local_minima()


def is_convex(pred, poset) -> tuple[bool, Optional[PosetElement]]:
    scan = _Scan(pred, poset)
    return _convex_from_scan(scan)


def _convex_from_scan(scan: _Scan):
    extra = sorted(set(scan.local_minima_idx) - set(scan.minima_idx))
    if not extra:
        return True, None
    return False, scan.elements[extra[0]]


def is_hereditary(pred, poset) -> tuple[bool, Optional[tuple]]:
    scan = _Scan(pred, poset)
    return _hereditary_from_scan(scan)


def _hereditary_from_scan(scan: _Scan):
    # closure under covers implies closure under all successors
    for i, ok in enumerate(scan.member):
        if not ok:
            continue
        for j in scan.succ[i]:
            if not scan.member[j]:
                return False, (scan.elements[i], scan.elements[j])
    return True, None


def is_weakly_hereditary(pred, poset) -> tuple[bool, Optional[tuple]]:
    scan = _Scan(pred, poset)
    return _weakly_hereditary_from_scan(scan)


def _weakly_hereditary_from_scan(scan: _Scan):
    fa = scan.family_above()
    mb = scan.min_below_or_equal()
    for i, e in enumerate(scan.elements):
        if scan.member[i] or not (fa[i] and mb[i]):
            continue
        # reconstruct a full witness (F, P, F') for element P = e
        poset = scan.poset
        above = next(
            scan.elements[j] for j in range(len(scan.elements))
            if scan.member[j] and scan.poset.strictly_precedes(e, scan.elements[j]))
        below = next(
            scan.elements[j] for j in scan.minima_idx
            if poset.precedes(scan.elements[j], e))
        return False, (above, e, below)
    return True, None


def is_strongly_convex(pred, poset) -> tuple[bool, Optional[tuple]]:
    scan = _Scan(pred, poset)
    return _strongly_convex_from_scan(scan)


def _strongly_convex_from_scan(scan: _Scan):
    convex, cw = _convex_from_scan(scan)
    if not convex:
        return False, (cw, None)
    poset = scan.poset
    mins = scan.minima_idx
    for i, e in enumerate(scan.elements):
        if not scan.member[i]:
            continue
        for mi in mins:
            fm = scan.elements[mi]
            if not poset.strictly_precedes(fm, e):
                continue
            if not any(
                scan.member[j] and poset.precedes(fm, scan.elements[j])
                for j in scan.succ[i]
            ):
                return False, (e, fm)
    return True, None


@dataclass(frozen=True)
class ClassificationReport:
    """Aggregate verdicts for one family on one ground poset.

    Construction asserts the two structural invariants: minima form a subset
    of the local minima, and the verdicts respect the implication chain
    hereditary => weakly hereditary => strongly convex => convex.  A
    violation would be an engine bug, not a property of the family.
    """

    family: str
    element_count: int
    minima: tuple
    local_minima: tuple
    convex: bool
    strongly_convex: bool
    weakly_hereditary: bool
    hereditary: bool
    witnesses: dict = field(default_factory=dict)

    def __post_init__(self):
        assert set(self.minima) <= set(self.local_minima), "minima must be local minima"
        chain = (self.hereditary, self.weakly_hereditary, self.strongly_convex, self.convex)
        for a, b in zip(chain, chain[1:]):
            assert not (a and not b), f"implication chain violated: {chain}"

    def verdicts(self) -> dict:
        return {
            "convex": self.convex,
            "strongly_convex": self.strongly_convex,
            "weakly_hereditary": self.weakly_hereditary,
            "hereditary": self.hereditary,
        }


def classify(pred: FamilyPredicate, poset: GroundPoset) -> ClassificationReport:
    """Full classification with witnesses for every false verdict."""
    scan = _Scan(pred, poset)
    convex, cw = _convex_from_scan(scan)
    if convex:
        strongly, sw = _strongly_convex_from_scan(scan)
    else:
        strongly, sw = False, None
    wh, ww = _weakly_hereditary_from_scan(scan)
    hered, hw = _hereditary_from_scan(scan)
    witnesses = {}
    if not convex and cw is not None:
        witnesses["convex"] = cw
    if not strongly and sw is not None:
        witnesses["strongly_convex"] = sw
    if not wh and ww is not None:
        witnesses["weakly_hereditary"] = ww
    if not hered and hw is not None:
        witnesses["hereditary"] = hw
    return ClassificationReport(
        family=pred.name,
        element_count=len(scan.elements),
        minima=tuple(scan.minima()),
        local_minima=tuple(scan.local_minima()),
        convex=convex,
        strongly_convex=strongly,
        weakly_hereditary=wh,
        hereditary=hered,
        witnesses=witnesses,
    )


# ---------------------------------------------------------------------------
# witness-scale helpers for grounds whose posets are too big to enumerate


def is_family_member(pred, poset, elem) -> bool:
    poset.validate(elem)
    return bool(pred.eval(poset.ground, elem))


def is_local_minimum(pred, poset, elem) -> bool:
    """Membership plus no in-family cover; needs only rank-many evaluations."""
    if not is_family_member(pred, poset, elem):
        return False
    return not any(pred.eval(poset.ground, s) for s in poset.immediate_successors(elem))


def find_member_strictly_below(pred, poset, elem, max_rank: Optional[int] = None,
                               budget: Optional[int] = None) -> Optional[PosetElement]:
    """Scan elements strictly below ``elem`` in ascending rank for a family
    member.  Stops at ``max_rank`` or after ``budget`` evaluations; returns
    None when the scanned region holds no member (which proves minimality
    only if the scan was unrestricted)."""
    poset.validate(elem)
    spent = 0
    for cand in _iter_below(poset, elem, max_rank):
        if budget is not None and spent >= budget:
            raise PosetSizeError(spent, budget)
        spent += 1
        if pred.eval(poset.ground, cand):
            return cand
    return None


def _iter_below(poset: GroundPoset, elem: PosetElement, max_rank):
    top_rank = elem.rank()
    limit = top_rank - 1 if max_rank is None else min(max_rank, top_rank - 1)
    if poset.order == VERTEX:
        ids = sorted(elem.vertices)
        for k in range(0, limit + 1):
            for s in combinations(ids, k):
                yield PosetElement(kind=poset.kind, vertices=frozenset(s))
        return
    if poset.order == EDGE:
        ids = sorted(elem.edges)
        for k in range(0, limit + 1):
            for s in combinations(ids, k):
                yield PosetElement(kind=poset.kind, vertices=poset._full_vertices,
                                   edges=frozenset(s))
        return
    yield PosetElement(kind=poset.kind)
    rows = sorted(elem.rows)
    cols = sorted(elem.cols)
    for rank in range(2, limit + 1):
        for nr in range(1, min(len(rows), rank - 1) + 1):
            nc = rank - nr
            if nc < 1 or nc > len(cols):
                continue
            for rs in combinations(rows, nr):
                for cs in combinations(cols, nc):
                    if nr == len(rows) and nc == len(cols):
                        continue
                    yield PosetElement(kind=poset.kind,
                                       rows=frozenset(rs), cols=frozenset(cs))


@dataclass(frozen=True)
class ConvexityRefutation:
    """A verified element of LM \\ M: locally minimal, with an explicitly
    exhibited family member strictly below it."""

    element: PosetElement
    member_below: PosetElement


def refute_convexity(pred, poset, elem, below: Optional[PosetElement] = None,
                     max_rank: Optional[int] = None) -> Optional[ConvexityRefutation]:
    """Certify elem in LM \\ M.  ``below`` may supply the smaller member; when
    omitted an ascending scan looks for one."""
    if not is_local_minimum(pred, poset, elem):
        return None
    if below is not None:
        poset.validate(below)
        if not poset.strictly_precedes(below, elem):
            raise PosetError("proposed member is not strictly below the element")
        if not pred.eval(poset.ground, below):
            return None
        return ConvexityRefutation(elem, below)
    found = find_member_strictly_below(pred, poset, elem, max_rank=max_rank)
    if found is None:
        return None
    return ConvexityRefutation(elem, found)
