"""Command-line front end: verify named fixtures, audit catalog families,
and classify user-supplied objects.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error,
3 a search budget ran out (undecided).  Reports are deterministic for fixed
inputs and seed; wall-clock timings appear only with --timings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Callable, Optional

from . import dgraphs as dg
from . import games as gm
from . import graphs as gr
from . import kernels as ker
from . import registry as reg
from .families import predicate
from .poset import (
    EDGE,
    LINE,
    VERTEX,
    GroundPoset,
    PosetSizeError,
    classify,
    refute_convexity,
)
from .serialize import ParseError, load_object

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


class Budget(Exception):
    """A solver gave up within its node budget."""


def _check(checks: list, name: str, ok: bool, detail: str = "") -> bool:
    checks.append({"name": name, "pass": bool(ok), "detail": detail})
    return bool(ok)


# ---------------------------------------------------------------------------
# fixture bundles


def _fx_circulant43(args) -> list:
    checks = []
    g43 = gr.circulant(43, [1, 7, 8])
    _check(checks, "shape", g43.n == 43 and g43.m == 129, "43 vertices, 129 arcs")
    published = {
        (43, 1): frozenset({1, 5, 10, 14, 16, 19, 25, 28, 30, 34, 39, 43}),
        (43, 7): frozenset({7, 9, 11, 13, 22, 24, 26, 28, 37, 39, 41, 43}),
        (43, 8): frozenset({3, 5, 8, 14, 17, 19, 23, 28, 32, 34, 37, 43}),
    }
    for arc, kern in published.items():
        sub = gr.Digraph(43, g43.arcs - {arc})
        _check(checks, f"kernel-after-deleting-{arc}", ker.is_kernel(sub, kern),
               f"K{arc[1]} has {len(kern)} vertices")
        _check(checks, f"not-kernel-intact-{arc}", not ker.is_kernel(g43, kern))
    if args.slow:
        res = ker.find_kernel(g43, budget=args.budget)
        if res.status == ker.UNDECIDED:
            raise Budget(f"kernel-less search undecided after {res.nodes} nodes")
        _check(checks, "kernel-less", res.status == ker.NONE,
               f"backtracking proof, {res.nodes} nodes")
    return checks


def _fx_circulant16(args) -> list:
    checks = []
    g16 = gr.circulant(16, [1, 7, 8])
    res = ker.find_kernel(g16, budget=args.budget)
    if res.status == ker.UNDECIDED:
        raise Budget(f"kernel search undecided after {res.nodes} nodes")
    _check(checks, "kernel-less", res.status == ker.NONE,
           f"backtracking proof, {res.nodes} nodes")
    all_have = all(
        ker.find_kernel(gr.delete_vertex(g16, v)).status == ker.FOUND
        for v in range(1, 17))
    _check(checks, "every-vertex-deletion-has-kernel", all_have)
    _check(checks, "explicit-kernel-after-deleting-16",
           ker.is_kernel(gr.delete_vertex(g16, 16), {9, 11, 13, 15}),
           "{9,11,13,15}, the mirror image of the published {1,3,5,7}")
    _check(checks, "published-kernel-on-reversed-orientation",
           ker.is_kernel(gr.delete_vertex(gr.reverse(g16), 16), {1, 3, 5, 7}),
           "{1,3,5,7} presumes arcs i -> i - jump")
    _check(checks, "kernel-less-proper-induced-subgraph",
           ker.find_kernel(gr.induced_subgraph(g16, [1, 2, 9, 10])).status == ker.NONE,
           "so the whole circulant is locally minimal but not minimal")
    return checks


def _fx_circulant_range(args) -> list:
    checks = []
    for n in range(3, 22):
        if n in (4, 7, 8):
            try:
                gr.circulant(n, [1, 7, 8])
                _check(checks, f"n={n}-rejected", False, "expected a loop rejection")
            except gr.GraphError:
                _check(checks, f"n={n}-rejected", True, "a jump is 0 mod n")
            continue
        res = ker.find_kernel(gr.circulant(n, [1, 7, 8]), budget=args.budget)
        if res.status == ker.UNDECIDED:
            raise Budget(f"n={n} undecided")
        _check(checks, f"n={n}", (res.status == ker.FOUND) == (n % 3 == 0),
               f"kernel {'exists' if res.status == ker.FOUND else 'missing'}")
    return checks


def _fx_wrochna(args) -> list:
    checks = []
    w = gr.wrochna()
    _check(checks, "shape", w.n == 15 and w.m == 25, "15 vertices, 25 edges")
    _check(checks, "ternary", gr.is_ternary(w))
    bad = [e for e in w.sorted_edges() if gr.is_ternary(gr.delete_edge(w, e))]
    _check(checks, "all-25-deletions-non-ternary", not bad,
           f"exceptions: {bad}" if bad else "")
    pred = predicate("ternary")
    poset = GroundPoset(w, EDGE, cap=1 << 26)
    ref = refute_convexity(pred, poset, poset.top(), below=poset.bottom())
    _check(checks, "ternary-family-not-convex-here", ref is not None,
           "whole graph locally edge-minimal; edge-free subgraph lies below")
    return checks


def _fx_cube(args) -> list:
    checks = []
    c = gr.cube()
    _check(checks, "shape", c.n == 8 and c.m == 12)
    sixes = [cy for cy in gr.chordless_cycles(c) if len(cy) == 6]
    _check(checks, "intact-has-induced-6-cycles", bool(sixes),
           f"{len(sixes)} of them")
    ok = all(
        gr.has_chordless_cycle(gr.delete_edge(c, e), lambda L: L == 6, max_len=6)
        for e in c.sorted_edges())
    _check(checks, "every-deletion-creates-induced-6-cycle", ok)
    return checks


def _fx_icosidodecahedron(args) -> list:
    checks = []
    ico = gr.icosidodecahedron()
    _check(checks, "shape", ico.n == 30 and ico.m == 60
           and all(ico.degree(v) == 4 for v in ico.vertices()),
           "30 vertices, 60 edges, 4-regular")
    _check(checks, "no-intact-induced-6-cycle",
           not gr.has_chordless_cycle(ico, lambda L: L == 6, max_len=6))
    _check(checks, "has-triangles",
           gr.has_chordless_cycle(ico, lambda L: L == 3, max_len=3))
    _check(checks, "has-induced-9-cycles",
           gr.has_chordless_cycle(ico, lambda L: L == 9, max_len=9))
    ok = all(
        gr.has_chordless_cycle(gr.delete_edge(ico, e), lambda L: L == 6, max_len=6)
        for e in ico.sorted_edges())
    _check(checks, "every-deletion-creates-induced-6-cycle", ok)
    return checks


def _fx_sp4x4(args) -> list:
    checks = []
    m = gm.sp_fixture_4x4()
    _check(checks, "sp-free", not gm.has_sp(m))
    rows = cols = range(1, 5)
    for line in (3, 4):
        _check(checks, f"delete-row-{line}-gains-sp",
               gm.has_sp(m.submatrix([r for r in rows if r != line], cols)))
        _check(checks, f"delete-col-{line}-gains-sp",
               gm.has_sp(m.submatrix(rows, [c for c in cols if c != line])))
    for line in (1, 2):
        _check(checks, f"delete-row-{line}-stays-sp-free",
               not gm.has_sp(m.submatrix([r for r in rows if r != line], cols)))
        _check(checks, f"delete-col-{line}-stays-sp-free",
               not gm.has_sp(m.submatrix(rows, [c for c in cols if c != line])))
    chain = [((1, 2, 3, 4), (1, 2, 3, 4)), ((2, 3, 4), (1, 2, 3, 4)),
             ((3, 4), (1, 2, 3, 4)), ((3, 4), (2, 3, 4)), ((3, 4), (3, 4))]
    ok = all(not gm.has_sp(m.submatrix(rs, cs)) for rs, cs in chain)
    _check(checks, "sp-free-chain-to-lower-2x2", ok,
           "row 1, row 2, column 1, column 2 deleted in turn")
    # no chain to the upper 2x2: its first step must drop one of the last
    # two rows or columns, and each such deletion creates a saddle point
    first = [m.submatrix([r for r in rows if r != line], cols) for line in (3, 4)]
    first += [m.submatrix(rows, [c for c in cols if c != line]) for line in (3, 4)]
    _check(checks, "no-chain-to-upper-2x2", all(gm.has_sp(s) for s in first))
    rep = classify(predicate("sp-free"), GroundPoset(m, LINE))
    _check(checks, "minima-are-the-two-2x2s",
           {tuple(sorted(e.rows)) for e in rep.minima} == {(1, 2), (3, 4)}
           and rep.convex and not rep.strongly_convex,
           "convex but not strongly convex on this ground")
    return checks


def _fx_ne3x3(args) -> list:
    checks = []
    g = gm.make_ne_free_3x3()
    _check(checks, "inequalities", gm.ne_free_3x3_inequalities_hold(g))
    _check(checks, "ne-free", not gm.has_ne(g))
    _check(checks, "locally-minimal", gm.is_locally_minimal_ne_free(g))
    w = gm.theorem3_check(g)
    _check(checks, "criterion-witness", w is not None,
           f"sigma={w.sigma}, delta={w.delta}" if w else "")
    from itertools import combinations

    ok = all(gm.has_ne(g.subgame(rs, cs))
             for rs in combinations(range(1, 4), 2)
             for cs in combinations(range(1, 4), 2))
    _check(checks, "all-2x2-subgames-have-ne", ok, "so the game is minimal too")
    return checks


def _fx_gameforms(args) -> list:
    checks = []
    forms = [gm.g1(), gm.g2(), gm.g3(), gm.g4(), gm.g5(),
             gm.g6(), gm.g7(), gm.g8(), gm.g9()]
    for i, f in enumerate(forms, 1):
        tight, wit = gm.is_tight(f)
        want = i <= 6
        _check(checks, f"g{i}-{'tight' if want else 'not-tight'}", tight == want,
               f"witness outcome set {sorted(wit)}" if wit else "")
    _check(checks, "g3-totally-tight", gm.is_totally_tight(gm.g3()))
    types = [gm.not_tight_2x2_type(f) for f in gm.catalog_not_tight_2x2()]
    _check(checks, "catalog-types", types == ["diag-2", "diag-3", "diag-4"],
           str(types))
    return checks


def _fx_abform(args) -> list:
    checks = []
    ab = gm.ab_form_4x4()
    _check(checks, "not-tight", not gm.is_tight(ab)[0])
    rows = cols = range(1, 5)
    _check(checks, "delete-last-row-tight",
           gm.is_tight(ab.subform([1, 2, 3], cols))[0])
    _check(checks, "delete-last-col-tight",
           gm.is_tight(ab.subform(rows, [1, 2, 3]))[0])
    _check(checks, "delete-two-last-rows-tight",
           gm.is_tight(ab.subform([1, 2], cols))[0])
    for line in (1, 2, 3):
        _check(checks, f"delete-row-{line}-stays-not-tight",
               not gm.is_tight(ab.subform([r for r in rows if r != line], cols))[0])
        _check(checks, f"delete-col-{line}-stays-not-tight",
               not gm.is_tight(ab.subform(rows, [c for c in cols if c != line]))[0])
    rep = classify(predicate("not-tight"), GroundPoset(ab, LINE))
    _check(checks, "strongly-convex-not-weakly-hereditary",
           rep.strongly_convex and not rep.weakly_hereditary)
    return checks


def _fx_pi_delta(args) -> list:
    checks = []
    pi, delta = dg.pi(), dg.delta()
    _check(checks, "pi-cc-and-not-cis", dg.is_cc(pi) and not dg.is_cis(pi)[0])
    _check(checks, "delta-cc-and-not-cis", dg.is_cc(delta) and not dg.is_cis(delta)[0])
    ok = all(dg.is_cis(dg.sub_dgraph(pi, [v for v in range(1, 5) if v != u]))[0]
             for u in range(1, 5))
    _check(checks, "pi-proper-subcolorings-cis", ok)
    two = dg.DGraph(2, 2, [1])
    _check(checks, "no-2-vertex-cc", not dg.is_cc(two))
    return checks


def _fx_bull_sub_pi(args) -> list:
    checks = []
    b = dg.bull_sub_pi()
    _check(checks, "bull-cis", dg.is_cis(dg.bull())[0])
    ok, wit = dg.is_cis(b)
    _check(checks, "not-cis", not ok,
           f"empty selection {tuple(sorted(map(sorted, wit.sets)))}" if wit else "")
    ok = all(dg.is_cis(dg.sub_dgraph(b, [v for v in range(1, 9) if v != u]))[0]
             for u in (5, 6, 7, 8))
    _check(checks, "deleting-any-substituted-vertex-restores-cis", ok)
    stuck = all(not dg.is_cis(dg.sub_dgraph(b, [v for v in range(1, 9) if v != u]))[0]
                for u in (1, 2, 3, 4))
    _check(checks, "deleting-original-p4-vertices-stays-not-cis", stuck,
           "the family cannot reach the substituted copy")
    return checks


def _fx_bull_sub_delta(args) -> list:
    checks = []
    b = dg.bull_sub_delta()
    ok, _ = dg.is_cis(b)
    _check(checks, "not-cis", not ok)
    good = all(dg.is_cis(dg.sub_dgraph(b, [v for v in range(1, 8) if v != u]))[0]
               for u in (5, 6, 7))
    _check(checks, "deleting-any-triangle-vertex-restores-cis", good)
    for palette in ((1, 2, 3), (2, 1, 3)):
        v = dg.bull_sub_delta(palette=palette)
        _check(checks, f"palette-{palette}-not-cis", not dg.is_cis(v)[0])
    return checks


def _fx_line_knn(args) -> list:
    checks = []
    g = dg.line_knn_2graph(3)
    _check(checks, "cis", dg.is_cis(g)[0])
    ok = all(not dg.is_cis(dg.sub_dgraph(g, [v for v in range(1, 10) if v != u]))[0]
             for u in range(1, 10))
    _check(checks, "all-9-deletions-not-cis", ok, "locally minimal, not minimal")
    return checks


def _fx_pi_sub_pi(args) -> list:
    checks = []
    g = dg.pi_sub_pi()
    _check(checks, "cc", dg.is_cc(g))
    rep = classify(predicate("cc"), GroundPoset(g, VERTEX))
    _check(checks, "convex-but-not-strongly",
           rep.convex and not rep.strongly_convex,
           f"witness {rep.witnesses.get('strongly_convex')}")
    return checks


def _fx_delta_search(args) -> list:
    checks = []
    n_max = 6 if args.slow else 5
    rep = dg.delta_conjecture_search(n_max, budget=args.budget)
    if not rep.complete:
        raise Budget(f"search incomplete after {rep.colorings_checked} colorings")
    _check(checks, f"no-cis-coloring-with-tricolored-triangle-up-to-{n_max}",
           not rep.counterexamples, f"{rep.colorings_checked} colorings checked")
    return checks


FIXTURES: dict[str, Callable] = {
    "circulant43": _fx_circulant43,
    "circulant16": _fx_circulant16,
    "circulant-range": _fx_circulant_range,
    "wrochna": _fx_wrochna,
    "cube": _fx_cube,
    "icosidodecahedron": _fx_icosidodecahedron,
    "sp-4x4": _fx_sp4x4,
    "two-sp-2x3": None,  # filled below
    "ne-3x3": _fx_ne3x3,
    "gameforms": _fx_gameforms,
    "ab-form-4x4": _fx_abform,
    "pi-delta": _fx_pi_delta,
    "bull-sub-pi": _fx_bull_sub_pi,
    "bull-sub-delta": _fx_bull_sub_delta,
    "line-knn-3": _fx_line_knn,
    "pi-sub-pi": _fx_pi_sub_pi,
    "delta-search": _fx_delta_search,
}


def _fx_two_sp(args) -> list:
    checks = []
    m = gm.two_sp_fixture_2x3()
    sps = gm.saddle_points(m)
    _check(checks, "two-sps-in-first-column", sps == {(1, 1), (2, 1)})
    _check(checks, "deleting-first-column-sp-free",
           not gm.has_sp(m.submatrix((1, 2), (2, 3))))
    rep = classify(predicate("has-sp"), GroundPoset(m, LINE))
    _check(checks, "strongly-convex-not-weakly-hereditary",
           rep.strongly_convex and not rep.weakly_hereditary)
    return checks


FIXTURES["two-sp-2x3"] = _fx_two_sp

SLOW_ONLY = {"icosidodecahedron"}


# ---------------------------------------------------------------------------
# report plumbing


def _emit(report: dict, args) -> None:
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    print(f"command: {report['command']}")
    for c in report.get("checks", []):
        mark = "PASS" if c["pass"] else "FAIL"
        detail = f"  ({c['detail']})" if c.get("detail") else ""
        print(f"  [{mark}] {c['name']}{detail}")
    for line in report.get("lines", []):
        print(f"  {line}")
    print(f"status: {report['status']}")


def _finish(report: dict, args, t0: float) -> int:
    if args.timings:
        report["elapsed_seconds"] = round(time.time() - t0, 3)
    _emit(report, args)
    return report["status"]


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify(args) -> int:
    t0 = time.time()
    name = args.fixture
    if name not in FIXTURES:
        print(f"unknown fixture {name!r}; valid names: "
              + ", ".join(sorted(FIXTURES)), file=sys.stderr)
        return EXIT_USAGE
    if name in SLOW_ONLY and not args.slow:
        print(f"fixture {name!r} is long-running; rerun with --slow",
              file=sys.stderr)
        return EXIT_USAGE
    report = {"command": f"verify {name}", "seed": args.seed}
    try:
        checks = FIXTURES[name](args)
    except Budget as exc:
        report["checks"] = []
        report["undecided"] = str(exc)
        report["status"] = EXIT_UNDECIDED
        return _finish(report, args, t0)
    report["checks"] = checks
    report["status"] = EXIT_PASS if all(c["pass"] for c in checks) else EXIT_FAIL
    return _finish(report, args, t0)


def cmd_audit(args) -> int:
    t0 = time.time()
    try:
        entry = reg.get_entry(args.family, args.order)
    except KeyError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    bounds = reg.AuditBounds(n=args.n, d=args.d, max_size=args.max,
                             alphabet=args.alphabet, seed=args.seed,
                             slow=args.slow)
    try:
        rep = reg.audit_family(entry.name, bounds, jobs=args.jobs)
    except reg.AuditBoundsError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    report = {
        "command": f"audit {entry.name}",
        "seed": args.seed,
        "expected": entry.expected,
        "grounds_audited": len(rep.grounds),
        "skipped": rep.skipped,
        "mismatches": rep.mismatches,
        "checks": [{"name": f"expected-{p}", "pass": True, "detail": str(entry.expected[p])}
                   for p in reg.PROPS if p not in rep.skipped] if rep.ok else [],
        "status": EXIT_PASS if rep.ok else EXIT_FAIL,
    }
    if not rep.ok:
        report["checks"] = [{"name": m, "pass": False, "detail": ""}
                            for m in rep.mismatches]
    return _finish(report, args, t0)


def cmd_classify(args) -> int:
    t0 = time.time()
    try:
        text = open(args.file).read()
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        ground = load_object(text, args.kind)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        pred = predicate(args.family)
    except KeyError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        poset = GroundPoset(ground, args.order, cap=args.budget or (1 << 20))
        rep = classify(pred, poset)
    except PosetSizeError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "command": f"classify {args.kind} under {args.order} order, "
                   f"family {args.family}",
        "seed": args.seed,
        "element_count": rep.element_count,
        "verdicts": rep.verdicts(),
        "minima": sorted(m.describe() for m in rep.minima),
        "local_minima": sorted(m.describe() for m in rep.local_minima),
        "witnesses": {k: _describe(v) for k, v in rep.witnesses.items()},
        "member": bool(pred.eval(ground, poset.top())),
        "checks": [],
        "status": EXIT_PASS,
    }
    report["lines"] = [
        f"verdicts: {rep.verdicts()}",
        f"minima: {report['minima']}",
        f"ground is a family member: {report['member']}",
    ]
    return _finish(report, args, t0)


def _describe(w):
    from .poset import PosetElement

    if isinstance(w, PosetElement):
        return w.describe()
    if isinstance(w, tuple):
        return "(" + ", ".join(_describe(x) for x in w) + ")"
    return str(w)


def cmd_list(args) -> int:
    t0 = time.time()
    entries = reg.list_families()
    report = {
        "command": "list",
        "seed": args.seed,
        "families": [
            {"name": e.name, "order": e.order, "kind": e.kind,
             "expected": e.expected, "universe": e.universe}
            for e in entries
        ],
        "lines": [f"{e.name:46s} [{e.kind}/{e.order}]" for e in entries],
        "checks": [],
        "status": EXIT_PASS,
    }
    return _finish(report, args, t0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=None,
                        help="parallel workers for audits (default: "
                             "CONVEXFAM_JOBS or machine parallelism)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None,
                        help="search node cap for kernel/conjecture searches")
    common.add_argument("--slow", action="store_true",
                        help="include long-running fixture parts")
    common.add_argument("--timings", action="store_true",
                        help="include wall-clock timings in reports")

    p = argparse.ArgumentParser(
        prog="convexfam",
        parents=[common],
        description="Convexity and heredity of discrete families: fixture "
                    "verification, catalog audits, and ad-hoc classification.")
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", parents=[common],
                        help="run a named fixture check bundle")
    pv.add_argument("fixture")
    pv.set_defaults(func=cmd_verify)

    pa = sub.add_parser("audit", parents=[common], help="audit a catalog family")
    pa.add_argument("family")
    pa.add_argument("--order", choices=(VERTEX, EDGE, LINE), default=None)
    pa.add_argument("--n", type=int, default=None, help="max vertices")
    pa.add_argument("--d", type=int, default=None, help="max colors")
    pa.add_argument("--max", type=int, default=None, help="max rows/columns")
    pa.add_argument("--alphabet", type=int, default=None,
                    help="alphabet size for matrix universes")
    pa.set_defaults(func=cmd_audit)

    pc = sub.add_parser("classify", parents=[common],
                        help="classify a user-supplied object")
    pc.add_argument("file")
    pc.add_argument("--kind", required=True,
                    choices=("graph", "digraph", "dgraph", "matrix",
                             "bimatrix", "gameform"))
    pc.add_argument("--order", choices=(VERTEX, EDGE, LINE), required=True)
    pc.add_argument("--family", required=True,
                    help="a predicate name, e.g. kernel-less or not-cis")
    pc.set_defaults(func=cmd_classify)

    pl = sub.add_parser("list", parents=[common],
                        help="list the catalog families")
    pl.set_defaults(func=cmd_list)
    return p


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is None:
        env = os.environ.get("CONVEXFAM_JOBS")
        args.jobs = int(env) if env else (os.cpu_count() or 1)
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
