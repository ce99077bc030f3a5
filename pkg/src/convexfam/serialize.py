"""Parsing and writing of the on-disk object formats.

Graphs travel as {"directed": bool, "n": int, "edges": [[u, v], ...]} with
1-based ids, or as DIMACS-like text (p/e lines, plus a-lines for arcs).
Colorings use {"n": int, "d": int, "edges": [[u, v, c], ...]} and must
color every pair exactly once.  Matrices and bimatrix games use
{"a": [[...]], "b": [[...]]?}; game forms {"outcomes": [[...], ...]}.

Parse errors raise ParseError with a line or field hint.
"""

from __future__ import annotations

import json
from typing import Union

from .dgraphs import DGraph
from .games import BimatrixGame, GameForm, MatrixGame
from .graphs import Digraph, Graph, GraphError

GroundObject = Union[Graph, Digraph, DGraph, MatrixGame, BimatrixGame, GameForm]


class ParseError(ValueError):
    pass


def _want(obj: dict, field: str, kinds, where: str):
    if field not in obj:
        raise ParseError(f"{where}: missing field {field!r}")
    val = obj[field]
    if not isinstance(val, kinds):
        raise ParseError(f"{where}: field {field!r} has the wrong type")
    return val


def graph_from_json(doc: dict) -> Union[Graph, Digraph]:
    directed = bool(doc.get("directed", False))
    n = _want(doc, "n", int, "graph")
    edges = _want(doc, "edges", list, "graph")
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2
                and all(isinstance(x, int) for x in e)):
            raise ParseError(f"graph: edges[{i}] must be a pair of integers")
        pairs.append((e[0], e[1]))
    try:
        return Digraph(n, pairs) if directed else Graph(n, pairs)
    except GraphError as exc:
        raise ParseError(f"graph: {exc}") from exc


def graph_to_json(g: Union[Graph, Digraph]) -> dict:
    directed = isinstance(g, Digraph)
    edges = g.sorted_arcs() if directed else g.sorted_edges()
    return {"directed": directed, "n": g.n, "edges": [list(e) for e in edges]}


def dgraph_from_json(doc: dict) -> DGraph:
    n = _want(doc, "n", int, "dgraph")
    d = _want(doc, "d", int, "dgraph")
    edges = _want(doc, "edges", list, "dgraph")
    need = n * (n - 1) // 2
    if len(edges) != need:
        raise ParseError(
            f"dgraph: a complete coloring of {n} vertices needs exactly "
            f"{need} colored pairs, got {len(edges)}")
    colors = {}
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 3
                and all(isinstance(x, int) for x in e)):
            raise ParseError(f"dgraph: edges[{i}] must be [u, v, color]")
        u, v, c = e
        key = (min(u, v), max(u, v))
        if key in colors:
            raise ParseError(f"dgraph: pair {key} colored twice")
        colors[key] = c
    try:
        return DGraph(n, d, colors)
    except GraphError as exc:
        raise ParseError(f"dgraph: {exc}") from exc


def dgraph_to_json(g: DGraph) -> dict:
    from itertools import combinations

    edges = [[u, v, g.color_of(u, v)] for u, v in combinations(range(1, g.n + 1), 2)]
    return {"n": g.n, "d": g.d, "edges": edges}


def _grid(doc, field, where) -> list:
    grid = _want(doc, field, list, where)
    for i, row in enumerate(grid):
        if not isinstance(row, list):
            raise ParseError(f"{where}: {field}[{i}] must be a list")
    return grid


def matrix_from_json(doc: dict) -> Union[MatrixGame, BimatrixGame]:
    a = _grid(doc, "a", "matrix")
    if "b" in doc:
        b = _grid(doc, "b", "matrix")
        try:
            return BimatrixGame(a, b)
        except Exception as exc:
            raise ParseError(f"bimatrix: {exc}") from exc
    try:
        return MatrixGame(a)
    except Exception as exc:
        raise ParseError(f"matrix: {exc}") from exc


def matrix_to_json(m: Union[MatrixGame, BimatrixGame]) -> dict:
    if isinstance(m, BimatrixGame):
        return {"a": [list(r) for r in m.a], "b": [list(r) for r in m.b]}
    return {"a": [list(r) for r in m.a]}


def gameform_from_json(doc: dict) -> GameForm:
    grid = _grid(doc, "outcomes", "gameform")
    try:
        return GameForm(grid)
    except Exception as exc:
        raise ParseError(f"gameform: {exc}") from exc


def gameform_to_json(f: GameForm) -> dict:
    return {"outcomes": [list(r) for r in f.outcomes]}


_KIND_PARSERS = {
    "graph": graph_from_json,
    "digraph": graph_from_json,
    "dgraph": dgraph_from_json,
    "matrix": matrix_from_json,
    "bimatrix": matrix_from_json,
    "gameform": gameform_from_json,
}


def parse_dimacs(text: str) -> Union[Graph, Digraph]:
    """DIMACS-like plain text: one ``p edge N M`` line, then ``e u v`` edge
    lines (or ``a u v`` arc lines for digraphs)."""
    n = None
    edges = []
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 3 or parts[1] not in ("edge", "edges"):
                raise ParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n = int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: vertex count must be an integer")
        elif parts[0] in ("e", "a"):
            if n is None:
                raise ParseError(f"line {lineno}: edge before the p line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except (IndexError, ValueError):
                raise ParseError(f"line {lineno}: expected two integer endpoints")
            (arcs if parts[0] == "a" else edges).append((u, v))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ParseError("missing 'p edge' header line")
    try:
        if arcs:
            if edges:
                raise ParseError("mixing e-lines and a-lines is not supported")
            return Digraph(n, arcs)
        return Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def load_object(text: str, kind: str) -> GroundObject:
    """Parse an object of the given kind from JSON text (graphs also accept
    DIMACS-like plain text)."""
    if kind not in _KIND_PARSERS:
        raise ParseError(f"unknown object kind {kind!r}; "
                         f"expected one of {sorted(_KIND_PARSERS)}")
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    if not stripped.startswith(("{", "[")):
        if kind in ("graph", "digraph"):
            return parse_dimacs(text)
        raise ParseError(f"{kind}: expected a JSON document")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    obj = _KIND_PARSERS[kind](doc)
    if kind == "digraph" and not isinstance(obj, Digraph):
        raise ParseError("digraph: set \"directed\": true")
    if kind == "bimatrix" and not isinstance(obj, BimatrixGame):
        raise ParseError("bimatrix: missing \"b\" grid")
    return obj
