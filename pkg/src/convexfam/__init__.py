"""Convexity and heredity of discrete families.

A finite ground object (graph, digraph, complete edge-coloring, matrix
game, bimatrix game, or game form) induces a containment poset of its
sub-objects.  For a family of sub-objects the engine computes minima and
local minima and decides whether the family is convex (all local minima are
global), strongly convex, weakly hereditary, or hereditary, always with an
explicit witness for a negative verdict.

The catalog in `convexfam.registry` instantiates the machinery for the
classical families: connectivity, strong connectivity, ternary graphs,
perfection, chromatic-versus-clique number, kernels in digraphs,
complementary connectedness and the common-selection property of complete
edge-colorings, saddle points, pure Nash equilibria, and tightness of game
forms.
"""

from .coloring import (
    chromatic_number,
    clique_number,
    critical_edges,
    is_meyniel,
    is_partitionable,
    is_perfect_bruteforce,
    is_perfect_spgt,
)
from .dgraphs import (
    DGraph,
    Selection,
    bull,
    bull_sub_delta,
    bull_sub_pi,
    contains_delta,
    contains_pi,
    delta,
    delta_conjecture_search,
    is_cc,
    is_cis,
    line_knn_2graph,
    pi,
    pi_sub_pi,
    project,
    sub_dgraph,
    substitute,
)
from .games import (
    BimatrixGame,
    GameForm,
    MatrixGame,
    Theorem3Witness,
    ab_form_4x4,
    catalog_not_tight_2x2,
    g1, g2, g3, g4, g5, g6, g7, g8, g9,
    has_ne,
    has_sp,
    is_locally_minimal_ne_free,
    is_tight,
    is_totally_tight,
    make_ne_free_3x3,
    merge_outcomes,
    nash_equilibria,
    not_tight_2x2_type,
    saddle_points,
    sp_2x2_criterion,
    sp_fixture_4x4,
    theorem3_check,
    two_sp_fixture_2x3,
)
from .graphs import (
    Digraph,
    Graph,
    GraphError,
    chordless_cycles,
    circulant,
    complement,
    complete,
    complete_bipartite,
    cube,
    cycle,
    delete_edge,
    delete_vertex,
    icosidodecahedron,
    induced_subgraph,
    is_connected,
    is_strongly_connected,
    is_ternary,
    line_graph,
    path,
    spanning_subgraph,
    wrochna,
)
from .kernels import (
    KernelCertificate,
    count_kernels,
    find_kernel,
    is_kernel,
    kernel_certificate,
)
from .poset import (
    ClassificationReport,
    FamilyPredicate,
    GroundPoset,
    PosetElement,
    PosetError,
    PosetSizeError,
    classify,
    immediate_successors,
    is_convex,
    is_hereditary,
    is_local_minimum,
    is_strongly_convex,
    is_weakly_hereditary,
    local_minima,
    minima,
    precedes,
    refute_convexity,
)
from .registry import AuditBounds, FamilyEntry, audit_family, list_families

__version__ = "0.1.0"
