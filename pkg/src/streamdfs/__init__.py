"""Semi-streaming construction of depth-first-search trees under an edge budget."""
from .algorithms import AlgoConfig, run
from .stream import (
    ROOT,
    BudgetExceeded,
    EdgeStream,
    GraphInput,
    PassStats,
    SpaceMeter,
    augment_with_root,
    ingest_edge_list,
    random_graph,
)
from .tree import DfsTree, read_tree, validate_dfs, write_tree

__all__ = [
    "ROOT",
    "AlgoConfig",
    "BudgetExceeded",
    "DfsTree",
    "EdgeStream",
    "GraphInput",
    "PassStats",
    "SpaceMeter",
    "augment_with_root",
    "ingest_edge_list",
    "random_graph",
    "read_tree",
    "run",
    "validate_dfs",
    "write_tree",
]
