"""List simple st-paths of bounded length, or the K shortest ones."""

from .directed import list_bounded_directed
from .formats import ParseError, parse_graph, serialize_graph
from .graph import INF, Graph, GraphError, Path, UndoOrderError, as_weight, path_weight
from .lcp import longest_common_prefix
from .oracle import brute_force_paths
from .shortest import (
    NegativeCycle,
    NegativeWeightError,
    ReweightResult,
    ShortestPathTree,
    johnson_reweight,
    sssp,
    subtree_contains,
)
from .stats import BoundedPathQuery, EmptyPathSet, EnumStats
from .traversal import ContainerKind, Frame, k_shortest, list_iterative
from .undirected import list_bounded_undirected

__all__ = [
    "BoundedPathQuery",
    "ContainerKind",
    "EmptyPathSet",
    "EnumStats",
    "Frame",
    "Graph",
    "GraphError",
    "INF",
    "NegativeCycle",
    "NegativeWeightError",
    "ParseError",
    "Path",
    "ReweightResult",
    "ShortestPathTree",
    "UndoOrderError",
    "as_weight",
    "brute_force_paths",
    "johnson_reweight",
    "k_shortest",
    "list_bounded_directed",
    "list_bounded_undirected",
    "list_iterative",
    "longest_common_prefix",
    "parse_graph",
    "path_weight",
    "serialize_graph",
    "sssp",
    "subtree_contains",
]
