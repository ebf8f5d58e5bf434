"""Detection, decomposition and sparsification of 2-vertex strongly biconnected digraphs."""

from .approx import (
    ApproxResult,
    UnionResult,
    approx_m2vsbss_alg1,
    augment_for_bap,
    bound_report,
    union_algorithm,
)
from .connectivity import (
    blocks,
    is_2vc_digraph,
    is_3vc_ugraph,
    is_biconnected,
    is_strongly_connected,
    scc,
)
from .errors import GraphError, ParseError, PreconditionError
from .exact import ExactResult, exact_m2vsbss, lower_bound
from .graph import (
    Digraph,
    UGraph,
    from_edge_list,
    remove_vertex,
    subgraph_with_arcs,
    to_edge_list,
    underlying,
)
from .sparsify import DeletionOrder, minimal_2vc_subgraph, minimal_3vc_subgraph
from .strong import b_articulation_points, is_2vsb, is_strongly_biconnected, sbcc

__all__ = [
    "ApproxResult", "UnionResult", "approx_m2vsbss_alg1", "augment_for_bap",
    "bound_report", "union_algorithm", "blocks", "is_2vc_digraph", "is_3vc_ugraph",
    "is_biconnected", "is_strongly_connected", "scc", "GraphError", "ParseError",
    "PreconditionError", "ExactResult", "exact_m2vsbss", "lower_bound", "Digraph",
    "UGraph", "from_edge_list", "remove_vertex", "subgraph_with_arcs", "to_edge_list",
    "underlying", "DeletionOrder", "minimal_2vc_subgraph", "minimal_3vc_subgraph",
    "b_articulation_points", "is_2vsb", "is_strongly_biconnected", "sbcc",
]
