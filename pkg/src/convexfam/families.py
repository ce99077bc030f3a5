"""Named family predicates bridging the object libraries to the poset engine.

Each predicate evaluates a property of the sub-object an element denotes:
an induced subgraph (vertex order), a spanning subgraph (edge order), or a
submatrix/subform (line order).  All are pure, so the engine may evaluate
them in any order.  Empty-grid conventions follow the solvability reading:
the empty matrix and single lines have saddle points and equilibria, empty
and single-line forms are tight.
"""

from __future__ import annotations

from . import coloring as col
from . import dgraphs as dg
from . import games as gm
from . import graphs as gr
from .kernels import has_kernel
from .poset import FamilyPredicate, PosetElement


def _graph_sub(g, e: PosetElement):
    if e.kind == "vertex-subset":
        return gr.induced_subgraph(g, e.vertices)
    return gr.spanning_subgraph(g, e.edges)


# -- graph families ----------------------------------------------------------


def _connected(g, e):
    return gr.is_connected(_graph_sub(g, e))


def _disconnected(g, e):
    return not gr.is_connected(_graph_sub(g, e))


def _strongly_connected(g, e):
    return gr.is_strongly_connected(_graph_sub(g, e))


def _not_strongly_connected(g, e):
    return not gr.is_strongly_connected(_graph_sub(g, e))


def _ternary(g, e):
    return gr.is_ternary(_graph_sub(g, e))


def _non_ternary(g, e):
    return not gr.is_ternary(_graph_sub(g, e))


def _perfect(g, e):
    sub = _graph_sub(g, e)
    if sub.n <= 6:
        return col.table_is_perfect(sub)
    return col.is_perfect_spgt(sub)


def _imperfect(g, e):
    return not _perfect(g, e)


def _chi_omega(sub):
    if sub.n <= 6:
        return col.table_chi_omega(sub)
    return col.chromatic_number(sub), col.clique_number(sub)


def _chi_eq_omega(g, e):
    chi, omega = _chi_omega(_graph_sub(g, e))
    return chi == omega


def _chi_gt_omega(g, e):
    chi, omega = _chi_omega(_graph_sub(g, e))
    return chi > omega


def _kernel_less(g, e):
    return not has_kernel(_graph_sub(g, e))


def _has_kernel(g, e):
    return has_kernel(_graph_sub(g, e))


# -- d-graph families --------------------------------------------------------


def _cc(g, e):
    return dg.cc_on_vertices(g, e.vertices)


def _not_cc(g, e):
    return not dg.cc_on_vertices(g, e.vertices)


def _cis(g, e):
    return dg.cis_on_vertices(g, e.vertices)


def _not_cis(g, e):
    return not dg.cis_on_vertices(g, e.vertices)


def _pi_delta_free(g, e):
    vs = sorted(e.vertices)
    return dg.pi_witness_on(g, vs) is None and dg.delta_witness_on(g, vs) is None


# -- matrix / bimatrix families ----------------------------------------------


def _sp_free(m, e):
    if not e.rows:
        return False
    return not gm.has_sp(m.submatrix(e.rows, e.cols))


def _has_sp(m, e):
    if not e.rows:
        return True
    return gm.has_sp(m.submatrix(e.rows, e.cols))


def _absolutely_determined(m, e):
    if not e.rows:
        return True
    return gm.is_absolutely_determined(m.submatrix(e.rows, e.cols))


def _ne_free(g, e):
    if not e.rows:
        return False
    return not gm.has_ne(g.subgame(e.rows, e.cols))


def _has_ne(g, e):
    if not e.rows:
        return True
    return gm.has_ne(g.subgame(e.rows, e.cols))


# -- game form families --------------------------------------------------------


def _tight(f, e):
    return gm.tight_on(f, e.rows, e.cols)


def _not_tight(f, e):
    return not gm.tight_on(f, e.rows, e.cols)


def _totally_tight(f, e):
    if not e.rows:
        return True
    return gm.is_totally_tight(f.subform(e.rows, e.cols))


def _not_totally_tight(f, e):
    return not _totally_tight(f, e)


PREDICATES = {
    "connected": _connected,
    "disconnected": _disconnected,
    "strongly-connected": _strongly_connected,
    "not-strongly-connected": _not_strongly_connected,
    "ternary": _ternary,
    "non-ternary": _non_ternary,
    "perfect": _perfect,
    "imperfect": _imperfect,
    "chi-eq-omega": _chi_eq_omega,
    "chi-gt-omega": _chi_gt_omega,
    "kernel-less": _kernel_less,
    "has-kernel": _has_kernel,
    "cc": _cc,
    "not-cc": _not_cc,
    "cis": _cis,
    "not-cis": _not_cis,
    "pi-delta-free": _pi_delta_free,
    "sp-free": _sp_free,
    "has-sp": _has_sp,
    "absolutely-determined": _absolutely_determined,
    "ne-free": _ne_free,
    "has-ne": _has_ne,
    "tight": _tight,
    "not-tight": _not_tight,
    "totally-tight": _totally_tight,
    "not-totally-tight": _not_totally_tight,
}


def predicate(name: str) -> FamilyPredicate:
    try:
        return FamilyPredicate(name, PREDICATES[name])
    except KeyError:
        raise KeyError(
            f"unknown family predicate {name!r}; known: {sorted(PREDICATES)}")
