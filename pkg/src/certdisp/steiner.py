"""Unweighted Steiner trees and the star-request reduction.

A star request set (one centre joined to every leaf) is solved by finding a
Steiner tree over the request endpoints and handing every tree edge to the
centre.  Any feasible dispersal of a star instance collapses back to a
connecting edge set that costs no more, so both problems share their optimum.

Two Steiner solvers are provided: an exact Dreyfus-Wagner table for a small
number of terminals, and the classical metric-closure MST heuristic (factor 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .dispersal import Dispersal, reachable
from .errors import CapExceededError, DisconnectedError, GraphError
from .graph import (Edge, Graph, RequestSet, bfs_distances, bfs_parents,
                    build_request_graph, canon, classify_structure)

DEFAULT_TERMINAL_CAP = 12


@dataclass(frozen=True)
class SteinerInstance:
    graph: Graph
    terminals: frozenset[int]

    def __post_init__(self) -> None:
        if not self.terminals:
            raise GraphError("Steiner instance needs at least one terminal")
        for t in self.terminals:
            self.graph.check_vertex(t)
        first = min(self.terminals)
        dist = bfs_distances(self.graph, first)
        cut_off = sorted(t for t in self.terminals if dist[t] < 0)
        if cut_off:
            raise DisconnectedError(f"terminals {cut_off} not connected to {first}")


@dataclass(frozen=True)
class SteinerTree:
    edges: frozenset[Edge]
    terminals: frozenset[int]

    @property
    def cost(self) -> int:
        return len(self.edges)

    def connects(self) -> bool:
        return connects(self.edges, self.terminals)


def connects(edges: Iterable[Edge], terminals: Iterable[int]) -> bool:
    ts = sorted(terminals)
    if len(ts) <= 1:
        return True
    return set(ts) <= reachable(edges, ts[0])


def prune(edges: Iterable[Edge], terminals: Iterable[int]) -> frozenset[Edge]:
    """Reduce a connecting edge set to a tree whose leaves are all terminals."""
    ts = sorted(set(terminals))
    es = set(edges)
    if len(ts) <= 1 or not es:
        return frozenset()
    adj: dict[int, list[int]] = {}
    for a, b in sorted(es):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    # spanning tree of the component holding the terminals
    tree: dict[int, set[int]] = {ts[0]: set()}
    frontier = [ts[0]]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj.get(x, ()):
                if y not in tree:
                    tree[y] = set()
                    tree[x].add(y)
                    tree[y].add(x)
                    nxt.append(y)
        frontier = nxt
    keep = set(ts)
    leaves = [v for v, nb in tree.items() if len(nb) <= 1 and v not in keep]
    while leaves:
        v = leaves.pop()
        for w in tree.pop(v):
            tree[w].discard(v)
            if len(tree[w]) <= 1 and w not in keep:
                leaves.append(w)
    return frozenset(canon(a, b) for a, nb in tree.items() for b in nb if a < b)


class SteinerSolver:
    """Per-graph Steiner machinery with cached BFS data and exact results.

    Reuse one instance when solving many terminal sets on the same graph.
    """

    def __init__(self, g: Graph, cap: int = DEFAULT_TERMINAL_CAP):
        self.g = g
        self.cap = cap
        self._parents: dict[int, list[Optional[int]]] = {}
        self._dist: dict[int, list[int]] = {}
        self._exact: dict[frozenset[int], frozenset[Edge]] = {}

    def dist(self, u: int) -> list[int]:
        d = self._dist.get(u)
        if d is None:
            d = self._dist[u] = bfs_distances(self.g, u)
        return d

    def path_edges(self, u: int, v: int) -> list[Edge]:
        """Edges of the tie-broken shortest path from u to v."""
        par = self._parents.get(u)
        if par is None:
            par = self._parents[u] = bfs_parents(self.g, u)
        if par[v] is None:
            raise DisconnectedError(f"no path between {u} and {v}")
        out = []
        x = v
        while x != u:
            p = par[x]
            out.append(canon(p, x))  # type: ignore[arg-type]
            x = p  # type: ignore[assignment]
        return out

    def _check(self, terminals: frozenset[int]) -> None:
        first = min(terminals)
        d = self.dist(first)
        cut_off = sorted(t for t in terminals if d[t] < 0)
        if cut_off:
            raise DisconnectedError(f"terminals {cut_off} not connected to {first}")

    def exact_cost(self, terminals: Iterable[int]) -> int:
        return len(self.exact(terminals))

    def exact(self, terminals: Iterable[int]) -> frozenset[Edge]:
        ts = frozenset(terminals)
        hit = self._exact.get(ts)
        if hit is not None:
            return hit
        if len(ts) > self.cap:
            raise CapExceededError(f"{len(ts)} terminals exceed the exact cap {self.cap}")
        self._check(ts)
        if len(ts) == 1:
            res = frozenset()
        elif len(ts) == 2:
            a, b = sorted(ts)
            res = frozenset(self.path_edges(a, b))
        else:
            res = prune(self._dreyfus_wagner(sorted(ts)), ts)
        self._exact[ts] = res
        return res

    def _dreyfus_wagner(self, ts: list[int]) -> set[Edge]:
        # restrict to the component containing the terminals
        d0 = self.dist(ts[0])
        verts = [v for v in range(self.g.n) if d0[v] >= 0]
        pos = {v: i for i, v in enumerate(verts)}
        dmat = np.array([[self.dist(a)[b] for b in verts] for a in verts], dtype=np.int64)

        q, rest = ts[-1], ts[:-1]
        k = len(rest)
        full = (1 << k) - 1
        best: list[Optional[np.ndarray]] = [None] * (full + 1)
        via: list[Optional[np.ndarray]] = [None] * (full + 1)  # Steiner vertex w per target v
        split: list[Optional[np.ndarray]] = [None] * (full + 1)  # subset chosen at w
        for i, t in enumerate(rest):
            best[1 << i] = dmat[pos[t]].copy()
        big = np.iinfo(np.int64).max // 4
        for s in range(1, full + 1):
            if s & (s - 1) == 0:
                continue
            low = s & -s
            merge = np.full(len(verts), big, dtype=np.int64)
            chosen = np.zeros(len(verts), dtype=np.int64)
            sub = (s - 1) & s
            while sub:
                if sub & low:
                    cand = best[sub] + best[s ^ sub]  # type: ignore[operator]
                    better = cand < merge
                    merge[better] = cand[better]
                    chosen[better] = sub
                sub = (sub - 1) & s
            total = merge[:, None] + dmat  # total[w, v]
            w = np.argmin(total, axis=0)
            best[s] = total[w, np.arange(len(verts))]
            via[s] = w
            split[s] = chosen

        edges: set[Edge] = set()
        stack = [(full, pos[q])]
        while stack:
            s, vi = stack.pop()
            if s & (s - 1) == 0:
                t = rest[s.bit_length() - 1]
                edges.update(self.path_edges(t, verts[vi]))
                continue
            wi = int(via[s][vi])  # type: ignore[index]
            edges.update(self.path_edges(verts[wi], verts[vi]))
            sub = int(split[s][wi])  # type: ignore[index]
            stack.append((sub, wi))
            stack.append((s ^ sub, wi))
        optimum = int(best[full][pos[q]])  # type: ignore[index]
        assert len(edges) >= optimum
        return edges

    def approx(self, terminals: Iterable[int]) -> frozenset[Edge]:
        """Metric-closure MST, expanded into shortest paths and pruned."""
        ts = sorted(set(terminals))
        self._check(frozenset(ts))
        if len(ts) <= 1:
            return frozenset()
        # Prim over the complete distance graph on the terminals
        in_tree = {ts[0]}
        key = {t: (self.dist(ts[0])[t], ts[0]) for t in ts[1:]}
        edges: set[Edge] = set()
        while key:
            t = min(key, key=lambda x: (key[x][0], x))
            _, src = key.pop(t)
            in_tree.add(t)
            edges.update(self.path_edges(src, t))
            dt = self.dist(t)
            for x in key:
                if dt[x] < key[x][0]:
                    key[x] = (dt[x], t)
        return prune(edges, ts)


def dreyfus_wagner(inst: SteinerInstance, cap: int = DEFAULT_TERMINAL_CAP) -> SteinerTree:
    solver = SteinerSolver(inst.graph, cap)
    return SteinerTree(solver.exact(inst.terminals), inst.terminals)


def steiner_2approx(inst: SteinerInstance) -> SteinerTree:
    return SteinerTree(SteinerSolver(inst.graph).approx(inst.terminals), inst.terminals)


def star_center(r: RequestSet) -> int:
    """Internal vertex of a star request set (smaller endpoint for a single request)."""
    h = build_request_graph(r)
    if classify_structure(h.graph).kind != "star":
        raise GraphError("request set is not a star")
    if len(r) == 1:
        return min(next(iter(r)))
    hub = max(range(h.graph.n), key=lambda i: (h.graph.degree(i), -i))
    return h.labels[hub]


def star_to_steiner(g: Graph, r: RequestSet) -> SteinerInstance:
    star_center(r)
    return SteinerInstance(g, frozenset(r.endpoints()))


def steiner_to_star_dispersal(s: SteinerTree, v_r: int, g: Graph) -> Dispersal:
    if not s.connects():
        raise GraphError("edge set does not connect the terminals")
    if s.edges and v_r not in s.terminals:
        raise GraphError(f"centre {v_r} is not a terminal")
    return Dispersal(g.n, {v_r: s.edges})


def dispersal_to_steiner(d: Dispersal) -> frozenset[Edge]:
    return frozenset(e for es in d.local.values() for e in es)


def solve_star(g: Graph, r: RequestSet, mode: str = "auto",
               cap: int = DEFAULT_TERMINAL_CAP, center: Optional[int] = None,
               solver: Optional[SteinerSolver] = None) -> Dispersal:
    """Solve a star request set; ``exact`` is optimal, ``approx`` within 2x."""
    if mode not in ("exact", "approx", "auto"):
        raise ValueError(f"unknown mode {mode!r}")
    if len(r) == 0:
        return Dispersal.empty(g.n)
    r.check_against(g)
    hub = star_center(r) if center is None else center
    if hub not in r.endpoints():
        raise GraphError(f"centre {hub} is not a request endpoint")
    terminals = frozenset(r.endpoints())
    if mode == "exact" and len(terminals) > cap:
        raise CapExceededError(f"{len(terminals)} terminals exceed the exact cap {cap}")
    solver = solver or SteinerSolver(g, cap)
    if mode == "approx" or len(terminals) > cap:
        edges = solver.approx(terminals)
    else:
        edges = solver.exact(terminals)
    return steiner_to_star_dispersal(SteinerTree(edges, terminals), hub, g)


__all__ = [
    "DEFAULT_TERMINAL_CAP", "SteinerInstance", "SteinerTree", "SteinerSolver",
    "connects", "prune", "dreyfus_wagner", "steiner_2approx", "star_center",
    "star_to_steiner", "steiner_to_star_dispersal", "dispersal_to_steiner",
    "solve_star",
]
