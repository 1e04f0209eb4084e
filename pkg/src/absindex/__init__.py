"""Atom-bond sum-connectivity index: computation, extremal constructions
and exhaustive small-order verification."""

from .extremal import (
    FormulaAudit,
    TuranDecomposition,
    chromatic_bound_printed,
    complete_split,
    double_star,
    double_star_split_value,
    formula_audit,
    independence_bound_printed,
    kite,
    pendant_bound_printed,
    pendant_maximizer,
    star,
    turan,
)
from .graphs import (
    Graph,
    Graph6Error,
    GraphError,
    complete_graph,
    decode_graph6,
    encode_graph6,
    from_edges,
)
from .index import (
    EdgeContribution,
    abs_index,
    edge_contributions,
    edge_weight,
    gain_contrast,
    shift_gain,
)
from .invariants import (
    GraphInvariants,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    chromatic_number,
    independence_number,
    pendant_count,
)
from .search import (
    Constraint,
    EdgeAdditionReport,
    SearchReport,
    check_edge_additions,
    check_scalar_properties,
    connected_class_forms,
    connected_class_forms_labeled,
    enumerate_connected,
    max_abs_under,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "Constraint",
    "EdgeAdditionReport",
    "EdgeContribution",
    "FormulaAudit",
    "Graph",
    "Graph6Error",
    "GraphError",
    "GraphInvariants",
    "SearchReport",
    "TuranDecomposition",
    "abs_index",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "check_edge_additions",
    "check_scalar_properties",
    "chromatic_bound_printed",
    "chromatic_number",
    "complete_graph",
    "complete_split",
    "connected_class_forms",
    "connected_class_forms_labeled",
    "decode_graph6",
    "double_star",
    "double_star_split_value",
    "edge_contributions",
    "edge_weight",
    "encode_graph6",
    "enumerate_connected",
    "formula_audit",
    "from_edges",
    "gain_contrast",
    "independence_bound_printed",
    "independence_number",
    "kite",
    "max_abs_under",
    "pendant_bound_printed",
    "pendant_count",
    "pendant_maximizer",
    "shift_gain",
    "star",
    "turan",
    "verify_theorem",
]
