"""Cyclic subgroup graphs of finite groups, line-graph recognition by two
independent methods, and an exhaustive checker for the classification of the
groups whose graph is a line graph."""

from .catalog import GroupRecord, build_catalog, catalog_specs, parse_group_spec
from .graphs import (
    EnumerationLimitError,
    SimpleGraph,
    canonical_form,
    canonical_key,
    connected_components,
    enumerate_connected_by_edges,
    enumerate_connected_graphs,
    enumerate_graphs,
    find_induced,
    is_isomorphic,
    isomorphism,
    make_named,
)
from .groups import (
    Factorization,
    FiniteGroup,
    GroupTableError,
    OrderClass,
    Subgroup,
    classify_order,
    direct_product,
    factorize,
    from_cayley_table,
    is_isomorphic_small_group,
    make_alternating,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_symmetric,
    to_cayley_table,
)
from .lattice import (
    GammaStats,
    LabeledGraph,
    VertexLabel,
    build_gamma,
    divisor_hasse,
    gamma_stats,
    to_dot,
    to_edge_list,
)
from .linegraph import (
    ForbiddenSet,
    Verdict,
    derive_forbidden_set,
    is_line_graph_by_beineke,
    is_line_graph_by_roots,
    line_graph,
)
from .verify import (
    CaseReport,
    CompletenessReport,
    TheoremReport,
    check_completeness_claim,
    predict,
    verify_case_theorems,
    verify_main_theorem,
)

__all__ = [
    "EnumerationLimitError",
    "Factorization",
    "FiniteGroup",
    "ForbiddenSet",
    "GammaStats",
    "GroupRecord",
    "GroupTableError",
    "LabeledGraph",
    "OrderClass",
    "SimpleGraph",
    "Subgroup",
    "TheoremReport",
    "CaseReport",
    "CompletenessReport",
    "Verdict",
    "VertexLabel",
    "build_catalog",
    "build_gamma",
    "canonical_form",
    "canonical_key",
    "catalog_specs",
    "check_completeness_claim",
    "classify_order",
    "connected_components",
    "derive_forbidden_set",
    "direct_product",
    "divisor_hasse",
    "enumerate_connected_by_edges",
    "enumerate_connected_graphs",
    "enumerate_graphs",
    "factorize",
    "find_induced",
    "from_cayley_table",
    "gamma_stats",
    "is_isomorphic",
    "is_isomorphic_small_group",
    "is_line_graph_by_beineke",
    "is_line_graph_by_roots",
    "isomorphism",
    "line_graph",
    "make_alternating",
    "make_cyclic",
    "make_dicyclic",
    "make_dihedral",
    "make_named",
    "make_symmetric",
    "parse_group_spec",
    "predict",
    "to_cayley_table",
    "to_dot",
    "to_edge_list",
    "verify_case_theorems",
    "verify_main_theorem",
]
