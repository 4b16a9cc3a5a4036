"""Exact dynamic program for tree request sets of bounded degree.

The request tree is rooted and processed children-first.  A cell
``(u, alpha)`` holds the cheapest dispersal for the requests inside u's
subtree whose local set at ``u`` also reaches ``alpha`` (the point where u
will meet its parent).  A cell is filled by guessing one meeting point per
child: u's own local set is then an exact Steiner tree over u, alpha and the
guessed points, and each child contributes its own cell at its guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .dispersal import Dispersal
from .errors import CapExceededError, DisconnectedError, GraphError
from .graph import (Edge, Graph, RequestSet, RootedTree, bfs_distances,
                    build_request_graph, canon, classify_structure, root_tree)
from .steiner import SteinerSolver

DEFAULT_DEGREE_CAP = 3
INF = float("inf")


@dataclass
class DPTable:
    """Cell costs and the meeting-point tuples that realise them."""

    g: Graph
    tree: RootedTree
    candidates: tuple[int, ...]
    solver: SteinerSolver
    cost: dict[int, dict[int, float]] = field(default_factory=dict)
    choice: dict[int, dict[int, tuple[int, ...]]] = field(default_factory=dict)

    def filled(self, u: int) -> bool:
        return u in self.cost

    def cell(self, u: int, alpha: int) -> Dispersal:
        """Materialise the partial dispersal stored at ``(u, alpha)``."""
        if self.cost[u].get(alpha, INF) == INF:
            raise GraphError(f"cell ({u}, {alpha}) is infeasible")
        local: dict[int, frozenset[Edge]] = {}
        stack = [(u, alpha)]
        while stack:
            x, a = stack.pop()
            picks = self.choice[x][a]
            local[x] = self.solver.exact({x, a, *picks})
            stack.extend(zip(self.tree.children[x], picks))
        return Dispersal(self.g.n, local)

    def subtree_requests(self, u: int) -> RequestSet:
        pairs = []
        for x in self.tree.subtree(u):
            pairs.extend(canon(x, c) for c in self.tree.children[x])
        return RequestSet(frozenset(pairs))


def dp_cell(u: int, alpha: int, table: DPTable) -> tuple[float, tuple[int, ...]]:
    """Best (cost, child meeting points) for cell ``(u, alpha)``.

    Tuples are scanned in lexicographic order and only a strictly cheaper one
    replaces the incumbent.
    """
    kids = table.tree.children[u]
    for q in kids:
        if not table.filled(q):
            raise GraphError(f"child {q} of {u} has not been tabulated")
    options = []
    for q in kids:
        row = table.cost[q]
        options.append([a for a in table.candidates if row[a] < INF])
    best: float = INF
    best_pick: tuple[int, ...] = ()
    steiner = table.solver.exact_cost
    for picks in product(*options):
        below = sum(table.cost[q][a] for q, a in zip(kids, picks))
        if below >= best:
            continue
        total = steiner({u, alpha, *picks}) + below
        if total < best:
            best, best_pick = total, picks
    return best, best_pick


def dp_table(g: Graph, r: RequestSet, degree_cap: int = DEFAULT_DEGREE_CAP,
             root: Optional[int] = None) -> DPTable:
    if len(r) == 0:
        raise GraphError("empty request set")
    r.check_against(g)
    h = build_request_graph(r)
    shape = classify_structure(h.graph)
    if not shape.is_tree:
        raise GraphError("request graph is not a tree")
    if shape.max_degree > degree_cap:
        raise CapExceededError(
            f"request tree has degree {shape.max_degree} > cap {degree_cap}")
    tree = root_tree(h, root)
    dist = bfs_distances(g, tree.root)
    cut_off = [v for v in h.labels if dist[v] < 0]
    if cut_off:
        raise DisconnectedError(f"request endpoints {cut_off} are not connected to {tree.root}")
    candidates = tuple(v for v in range(g.n) if dist[v] >= 0)
    # u plus alpha plus one point per child
    solver = SteinerSolver(g, cap=max(degree_cap + 2, 3))
    table = DPTable(g, tree, candidates, solver)
    for u in tree.order:
        costs: dict[int, float] = {}
        picks: dict[int, tuple[int, ...]] = {}
        for alpha in candidates:
            costs[alpha], picks[alpha] = dp_cell(u, alpha, table)
        table.cost[u] = costs
        table.choice[u] = picks
    return table


def dp_solve(g: Graph, r: RequestSet, degree_cap: int = DEFAULT_DEGREE_CAP,
             root: Optional[int] = None) -> Dispersal:
    """Optimal dispersal for a tree request set with maximum degree <= cap."""
    if len(r) == 0:
        return Dispersal.empty(g.n)
    table = dp_table(g, r, degree_cap, root)
    top = table.tree.root
    return table.cell(top, top)
