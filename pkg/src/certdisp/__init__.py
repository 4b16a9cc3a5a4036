"""Solvers for the minimum certificate dispersal problem on undirected graphs."""

from .approx_tree import depth_parity_partition, solve_tree_approx, star_components
from .dispersal import Dispersal, connecting_point, cost, first_violation, satisfies, union
from .dp import dp_solve
from .errors import (CapExceededError, CertDispError, DisconnectedError, GraphError,
                     UnsupportedInstanceError)
from .graph import (Graph, Path, RequestGraph, RequestSet, RootedTree, build_request_graph,
                    classify_structure, root_tree, shortest_path)
from .oracle import brute_force_mcd, brute_force_steiner, brute_force_vertex_cover
from .solvers import SolveReport, solve
from .steiner import (SteinerInstance, SteinerTree, dreyfus_wagner, solve_star,
                      steiner_2approx)
from .treegraph import (CutBipartite, build_cut_bipartite, max_matching,
                        min_vertex_cover_from_matching, solve_treegraph, split_at_edge)

__version__ = "0.1.0"

__all__ = [
    "depth_parity_partition", "solve_tree_approx", "star_components", "Dispersal",
    "connecting_point", "cost", "first_violation", "satisfies", "union", "dp_solve",
    "CapExceededError", "CertDispError", "DisconnectedError", "GraphError",
    "UnsupportedInstanceError", "Graph", "Path", "RequestGraph", "RequestSet", "RootedTree",
    "build_request_graph", "classify_structure", "root_tree", "shortest_path",
    "brute_force_mcd", "brute_force_steiner", "brute_force_vertex_cover", "SolveReport",
    "solve", "SteinerInstance", "SteinerTree", "dreyfus_wagner", "solve_star",
    "steiner_2approx", "CutBipartite", "build_cut_bipartite", "max_matching",
    "min_vertex_cover_from_matching", "solve_treegraph", "split_at_edge",
]
