"""Exact edge coloring, criticality and (P3;k)-co-critical graph tools."""

from .canon import CanonicalForm, canonical_form, enumerate_graphs, iter_graphs
from .cocritical import (
    BoundParams,
    CoCriticalReport,
    bound_min_edges,
    certify_extremal,
    construct_extremal,
    is_p3k_cocritical,
    one_factorization,
    ramsey_p3_bruteforce,
    ramsey_p3_formula,
)
from .coloring import (
    KempeChain,
    ProperEdgeColoring,
    chromatic_index_exact,
    find_proper_coloring,
    kempe_chain,
    kempe_swap,
    missing_colors,
    vizing_plus_one_coloring,
)
from .criticality import (
    classify,
    degree_partition,
    is_critical_edge,
    is_delta_critical,
    is_saturated_class1,
    val_check,
)
from .graph import SimpleGraph, complete_graph, cycle, disjoint_union, empty_graph
from .graph6 import encode_graph6, parse_graph6
from .harness import VerificationReport, emit_report, sweep, verify_lower, verify_song

__version__ = "0.1.0"
