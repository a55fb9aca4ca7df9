"""Eccentric connectivity index, eccentric distance sum, and exhaustive checks of their bounds."""

from .graph import (
    DistanceProfile,
    Disconnected,
    Graph,
    GraphError,
    InvalidEdge,
    NotATree,
    build_graph,
    distance_profile,
    is_caterpillar,
    is_regular,
    is_self_centered,
)
from .invariants import IndexReport, index_report
from .canon import canonical_form, is_isomorphic
from .enumeration import EnumerationStream, all_connected_graphs, all_trees, filtered, where
from .formats import emit_graph6, parse_graph6

__all__ = [
    "DistanceProfile", "Disconnected", "Graph", "GraphError", "InvalidEdge", "NotATree",
    "build_graph", "distance_profile", "is_caterpillar", "is_regular", "is_self_centered",
    "IndexReport", "index_report", "canonical_form", "is_isomorphic",
    "EnumerationStream", "all_connected_graphs", "all_trees", "filtered", "where",
    "emit_graph6", "parse_graph6",
]
