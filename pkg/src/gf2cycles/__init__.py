"""Exact mod-2 cycle spaces of graphs, graph squares, deleted products and 2-hypergraphs."""

from ._accel import BACKEND
from .cycles import CycleSpace, cycle_space, is_one_cycle
from .gf2 import BitMatrix, BitVector, kernel_basis, rank, solve_in_span
from .graph import EdgeSet, Graph, GraphError, complete, complete_bipartite, cycle, path, tilde_complete
from .products import CellComplex, ProductGraph, deleted_square_graph, square_graph

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BitMatrix",
    "BitVector",
    "CellComplex",
    "CycleSpace",
    "EdgeSet",
    "Graph",
    "GraphError",
    "ProductGraph",
    "complete",
    "complete_bipartite",
    "cycle",
    "cycle_space",
    "deleted_square_graph",
    "is_one_cycle",
    "kernel_basis",
    "path",
    "rank",
    "solve_in_span",
    "square_graph",
    "tilde_complete",
]
