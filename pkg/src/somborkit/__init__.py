"""Sombor index toolkit: graph invariants, extremal families, switching
operations and exhaustive certification on small graphs."""

from .extremal import (
    ClassError,
    FamilySpec,
    build_family,
    build_pnk,
    build_split_join,
    f_value,
    max_connectivity_bound,
    min_bridges_bound,
    split_join_extremal,
)
from .formats import ParseError, from_graph6, iter_graphs, to_graph6
from .graph import Graph, GraphError, build_complete, build_cycle, build_path, build_star
from .invariants import degree_sequence, edge_term, sombor, sombor_index
from .structure import ClassSignature, classify, count_bridges, edge_connectivity, unique_cycle, vertex_connectivity

__version__ = "0.1.0"

__all__ = [
    "ClassError",
    "ClassSignature",
    "FamilySpec",
    "Graph",
    "GraphError",
    "ParseError",
    "build_complete",
    "build_cycle",
    "build_family",
    "build_path",
    "build_pnk",
    "build_split_join",
    "build_star",
    "classify",
    "count_bridges",
    "degree_sequence",
    "edge_connectivity",
    "edge_term",
    "f_value",
    "from_graph6",
    "iter_graphs",
    "max_connectivity_bound",
    "min_bridges_bound",
    "sombor",
    "sombor_index",
    "split_join_extremal",
    "to_graph6",
    "unique_cycle",
    "vertex_connectivity",
]
