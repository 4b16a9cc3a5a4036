"""Exact solver for instances whose host graph is a tree.

In a tree every tree edge ``e`` is the only link between its two sides, so a
request crossing ``e`` can only be satisfied if one of its endpoints holds
``e``.  The holders of ``e`` must therefore form a vertex cover of the
bipartite graph of crossing requests, and that condition is also sufficient.
Covers for different edges are independent, so taking a minimum cover per
edge (Hopcroft-Karp matching plus Konig's construction) is optimal.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .dispersal import Dispersal
from .errors import GraphError
from .graph import Edge, Graph, RequestSet, canon, classify_structure

INF = float("inf")


@dataclass(frozen=True)
class CutBipartite:
    """Requests crossing a cut, oriented as ``(left endpoint, right endpoint)``."""

    left: frozenset[int]
    right: frozenset[int]
    edges: tuple[tuple[int, int], ...]
    source: Optional[Edge] = None

    def __post_init__(self) -> None:
        if self.left & self.right:
            raise GraphError("bipartition sides overlap")
        for a, b in self.edges:
            if a not in self.left or b not in self.right:
                raise GraphError(f"edge {(a, b)} does not go from left to right")

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {a: [] for a in sorted(self.left)}
        for a, b in sorted(set(self.edges)):
            adj[a].append(b)
        return adj


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset[int]

    def __len__(self) -> int:
        return len(self.vertices)

    def covers(self, edges: Iterable[tuple[int, int]]) -> bool:
        return all(a in self.vertices or b in self.vertices for a, b in edges)


def hopcroft_karp(adj: Mapping[Hashable, Sequence[Hashable]]) -> dict:
    """Maximum bipartite matching; returns the left-to-right partner map.

    ``adj`` maps each left vertex to its right neighbours.  Left vertices are
    scanned in the mapping's iteration order, neighbours in list order.
    """
    match_l: dict = {}
    match_r: dict = {}
    lefts = list(adj)
    while True:
        # layered BFS from the free left vertices
        dist: dict = {}
        queue = deque()
        for u in lefts:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
        limit = INF
        while queue:
            u = queue.popleft()
            if dist[u] >= limit:
                continue
            for v in adj[u]:
                w = match_r.get(v)
                if w is None:
                    limit = min(limit, dist[u] + 1)
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if limit == INF:
            return match_l
        # vertex-disjoint shortest augmenting paths by iterative DFS
        ptr = {u: 0 for u in dist}
        for root in lefts:
            if root in match_l or dist.get(root) != 0:
                continue
            stack = [root]
            via: dict = {}
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                pushed = False
                while ptr[u] < len(nbrs):
                    v = nbrs[ptr[u]]
                    ptr[u] += 1
                    w = match_r.get(v)
                    if w is None:
                        if dist[u] + 1 == limit:
                            via[u] = v
                            for x in stack:
                                match_l[x] = via[x]
                                match_r[via[x]] = x
                            stack = []
                            pushed = True
                            break
                    elif dist.get(w) == dist[u] + 1 and dist[w] < limit:
                        via[u] = v
                        stack.append(w)
                        pushed = True
                        break
                if not pushed:
                    dist[u] = INF
                    stack.pop()


def konig_cover(adj: Mapping[Hashable, Sequence[Hashable]], match_l: Mapping) -> set:
    """Minimum vertex cover from a maximum matching.

    Alternating search from the unmatched left vertices reaches Z; the cover
    is (left - Z) | (right & Z).
    """
    match_r = {v: u for u, v in match_l.items()}
    seen_l = {u for u in adj if u not in match_l}
    seen_r: set = set()
    queue = deque(u for u in adj if u not in match_l)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in seen_r or match_l.get(u) == v:
                continue
            seen_r.add(v)
            w = match_r.get(v)
            if w is not None and w not in seen_l:
                seen_l.add(w)
                queue.append(w)
    return {u for u in adj if u not in seen_l} | seen_r


def max_matching(b: CutBipartite) -> Matching:
    match_l = hopcroft_karp(b.adjacency())
    return Matching(frozenset(match_l.items()))


def min_vertex_cover_from_matching(b: CutBipartite, m: Matching) -> VertexCover:
    adj = b.adjacency()
    match_l = dict(m.pairs)
    cover = VertexCover(frozenset(konig_cover(adj, match_l)))
    if len(cover) != len(m) or not cover.covers(b.edges):
        raise ValueError("matching is not maximum: Konig construction failed to cover")
    return cover


def split_at_edge(t: Graph, e: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Vertex sets of the two components of ``t - e``; the first holds ``e[0]``."""
    if not classify_structure(t).is_tree:
        raise GraphError("graph is not a tree")
    u, v = int(e[0]), int(e[1])
    if canon(u, v) not in t.edges:
        raise GraphError(f"{(u, v)} is not an edge of the tree")
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in t.adjacency[x]:
            if y not in seen and not (x == u and y == v):
                seen.add(y)
                queue.append(y)
    return frozenset(seen), frozenset(range(t.n)) - seen


def build_cut_bipartite(t: Graph, r: RequestSet, e: Sequence[int]) -> CutBipartite:
    """Bipartite graph of the requests separated by tree edge ``e``.

    The left side is the component containing the smaller endpoint of ``e``.
    """
    u, v = canon(int(e[0]), int(e[1]))
    left, right = split_at_edge(t, (u, v))
    crossing = []
    for a, c in r:
        if a in left and c in right:
            crossing.append((a, c))
        elif c in left and a in right:
            crossing.append((c, a))
    return CutBipartite(left, right, tuple(sorted(crossing)), (u, v))


class _Rooted:
    """Parent pointers and DFS entry/exit times of a tree rooted at 0."""

    def __init__(self, t: Graph):
        n = t.n
        self.parent = [-1] * n
        self.depth = [0] * n
        self.tin = [0] * n
        self.tout = [0] * n
        clock = 0
        if n == 0:
            return
        self.parent[0] = 0
        stack = [(0, 0)]
        while stack:
            x, i = stack.pop()
            if i == 0:
                self.tin[x] = clock
                clock += 1
            nbrs = t.adjacency[x]
            while i < len(nbrs) and nbrs[i] == self.parent[x]:
                i += 1
            if i < len(nbrs):
                y = nbrs[i]
                stack.append((x, i + 1))
                self.parent[y] = x
                self.depth[y] = self.depth[x] + 1
                stack.append((y, 0))
            else:
                self.tout[x] = clock
        self.parent[0] = -1

    def inside(self, x: int, c: int) -> bool:
        """Is ``x`` in the subtree below ``c``?"""
        return self.tin[c] <= self.tin[x] < self.tout[c]

    def path_children(self, a: int, b: int) -> list[int]:
        """Tree edges on the a-b path, each named by its lower (child) vertex."""
        out = []
        depth, parent = self.depth, self.parent
        while depth[a] > depth[b]:
            out.append(a)
            a = parent[a]
        while depth[b] > depth[a]:
            out.append(b)
            b = parent[b]
        while a != b:
            out.append(a)
            out.append(b)
            a, b = parent[a], parent[b]
        return out


def cut_bipartites(t: Graph, r: RequestSet) -> dict[Edge, list[tuple[int, int]]]:
    """Crossing requests for every tree edge, oriented left-to-right.

    Each request is charged only to the edges on its own tree path, and its
    side is read off the DFS interval of the edge's child vertex.
    """
    if not classify_structure(t).is_tree:
        raise GraphError("graph is not a tree")
    r.check_against(t)
    rt = _Rooted(t)
    crossing: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for a, b in r:
        for c in rt.path_children(a, b):
            crossing[c].append((a, b))
    out: dict[Edge, list[tuple[int, int]]] = {}
    for c in sorted(crossing):
        p = rt.parent[c]
        e = canon(c, p)
        child_is_left = e[0] == c
        oriented = []
        for a, b in crossing[c]:
            a_below = rt.inside(a, c)
            oriented.append((a, b) if a_below == child_is_left else (b, a))
        out[e] = sorted(oriented)
    return out


def solve_treegraph(t: Graph, r: RequestSet, check: bool = True) -> Dispersal:
    """Optimal dispersal on a tree host graph, for any request set."""
    local: dict[int, set[Edge]] = defaultdict(set)
    for e, pairs in cut_bipartites(t, r).items():
        adj: dict[int, list[int]] = {}
        for a, b in pairs:
            adj.setdefault(a, []).append(b)
        match_l = hopcroft_karp(adj)
        cover = konig_cover(adj, match_l)
        if check and (len(cover) != len(match_l)
                      or not all(a in cover or b in cover for a, b in pairs)):
            raise AssertionError(f"Konig equality failed on cut {e}")
        for w in cover:
            local[w].add(e)
    return Dispersal(t.n, {w: frozenset(es) for w, es in local.items()})
