"""Inconsistency analysis for ordinal pairwise comparisons with ties."""

from .core import (
    DegreeTriple,
    GtGraph,
    OrdinalPcMatrix,
    TriadCensus,
    TriadClass,
    classify_triad,
    degrees,
    graph_to_matrix,
    list_inconsistent_triads,
    matrix_to_graph,
    triad_census,
    validate_matrix,
)
from .indices import (
    IndexReport,
    analyze,
    count_inconsistent,
    count_inconsistent_tournament_fast,
    dt_edge_count,
    eta_limits,
    max_inconsistent_no_ties,
    max_inconsistent_with_ties,
)
from .bounds import (
    BoundsRow,
    bounds_table,
    c_bound,
    d_bound,
    e_bound,
    f_bound,
    g_bound,
    h_bound,
)
from .extremal import (
    CoverInstance,
    DtGraph,
    build_cover_instance,
    gen_max_dt_graph,
    gen_max_tournament,
    min_triad_cover,
    rebalance_to_max,
)
from .oracle import (
    EnumerationReport,
    enumerate_max,
    per_m_minima,
    random_gt_graph,
)

__version__ = "0.1.0"

__all__ = [
    "OrdinalPcMatrix",
    "GtGraph",
    "DegreeTriple",
    "TriadClass",
    "TriadCensus",
    "validate_matrix",
    "matrix_to_graph",
    "graph_to_matrix",
    "degrees",
    "classify_triad",
    "triad_census",
    "list_inconsistent_triads",
    "IndexReport",
    "analyze",
    "count_inconsistent",
    "count_inconsistent_tournament_fast",
    "dt_edge_count",
    "eta_limits",
    "max_inconsistent_no_ties",
    "max_inconsistent_with_ties",
    "BoundsRow",
    "bounds_table",
    "c_bound",
    "d_bound",
    "e_bound",
    "f_bound",
    "g_bound",
    "h_bound",
    "DtGraph",
    "CoverInstance",
    "gen_max_tournament",
    "rebalance_to_max",
    "gen_max_dt_graph",
    "build_cover_instance",
    "min_triad_cover",
    "EnumerationReport",
    "enumerate_max",
    "per_m_minima",
    "random_gt_graph",
    "__version__",
]
