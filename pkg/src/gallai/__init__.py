"""Line, Gallai and anti-Gallai graphs, and certified recognition of Gallai forests and trees."""

from .certificates import Verdict
from .formats import ParseError, parse_edge_list, parse_graph6, to_graph6
from .graph import (
    Edge,
    Graph,
    GraphError,
    complement,
    connected_components,
    induced_subgraph,
    is_forest,
    is_isomorphic_small,
    is_tree,
)
from .operators import LabeledGraph, anti_gallai, apex_embedding, gallai, line_graph
from .recognition import (
    Route,
    block_cut_tree,
    find_bad_homogeneous_set,
    find_induced_pattern,
    is_chordal,
    is_gallai_forest,
    is_gallai_tree,
    is_gallai_tree_structural,
)

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "LabeledGraph",
    "ParseError",
    "Route",
    "Verdict",
    "anti_gallai",
    "apex_embedding",
    "block_cut_tree",
    "complement",
    "connected_components",
    "find_bad_homogeneous_set",
    "find_induced_pattern",
    "gallai",
    "induced_subgraph",
    "is_chordal",
    "is_forest",
    "is_gallai_forest",
    "is_gallai_tree",
    "is_gallai_tree_structural",
    "is_isomorphic_small",
    "is_tree",
    "line_graph",
    "parse_edge_list",
    "parse_graph6",
    "to_graph6",
]
