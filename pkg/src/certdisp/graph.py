"""Undirected graphs, request sets, request graphs and rooted trees.

Vertices are dense integer ids ``0..n-1``.  Edges and requests are stored as
canonical ``(min, max)`` tuples so that set comparisons and serialisation are
deterministic.  Every traversal expands the lowest-numbered neighbour first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import GraphError

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        seen: set[Edge] = set()
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise GraphError(f"vertex {x} out of range [0, {n})")
            e = canon(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        adjacency = tuple(tuple(sorted(x)) for x in nbrs)
        return cls(n, frozenset(seen), adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [canon(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


@dataclass(frozen=True)
class RequestSet:
    """A deduplicated set of unordered vertex pairs."""

    pairs: frozenset[Edge]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]], n: Optional[int] = None,
                   strict: bool = False) -> "RequestSet":
        """Build a request set.  With ``strict`` duplicates are an error
        instead of being merged."""
        out: set[Edge] = set()
        for raw in pairs:
            u, v = int(raw[0]), int(raw[1])
            if u == v:
                raise GraphError(f"self-request at vertex {u}")
            if n is not None:
                for x in (u, v):
                    if not 0 <= x < n:
                        raise GraphError(f"vertex {x} out of range [0, {n})")
            e = canon(u, v)
            if strict and e in out:
                raise GraphError(f"duplicate request {e}")
            out.add(e)
        return cls(frozenset(out))

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, tuple) and len(item) == 2:
            return canon(*item) in self.pairs
        return False

    def endpoints(self) -> list[int]:
        return sorted({x for e in self.pairs for x in e})

    def check_against(self, g: Graph) -> None:
        for u, v in self.pairs:
            g.check_vertex(u)
            g.check_vertex(v)


EMPTY_REQUESTS = RequestSet(frozenset())


@dataclass(frozen=True)
class RequestGraph:
    """H_R relabelled onto ``0..k-1``; ``labels[i]`` is the host id of local vertex i."""

    graph: Graph
    labels: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.labels

    def local(self, host: int) -> int:
        try:
            return self._index[host]
        except KeyError:
            raise GraphError(f"vertex {host} is not a request endpoint") from None

    @cached_property
    def _index(self) -> Mapping[int, int]:
        return {h: i for i, h in enumerate(self.labels)}

    def host_edges(self) -> list[Edge]:
        return sorted(canon(self.labels[a], self.labels[b]) for a, b in self.graph.edges)

    def max_degree(self) -> int:
        return max((self.graph.degree(v) for v in range(self.graph.n)), default=0)


@dataclass(frozen=True)
class Structure:
    kind: str  # "tree" | "star" | "forest" | "general"
    max_degree: int

    @property
    def is_tree(self) -> bool:
        return self.kind in ("tree", "star")


@dataclass(frozen=True)
class RootedTree:
    root: int
    parent: Mapping[int, Optional[int]]
    children: Mapping[int, tuple[int, ...]]
    depth: Mapping[int, int]
    order: tuple[int, ...]  # post-order: every vertex after all its descendants

    def gamma(self, u: int) -> int:
        return len(self.children[u])

    def subtree(self, u: int) -> list[int]:
        out, stack = [], [u]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(self.children[x])
        return out


def bfs_parents(g: Graph, source: int) -> list[Optional[int]]:
    """BFS predecessor array; ``parent[source] == source``, unreachable is None."""
    parent: list[Optional[int]] = [None] * g.n
    parent[source] = source
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if parent[y] is None:
                parent[y] = x
                queue.append(y)
    return parent


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def shortest_path(g: Graph, u: int, v: int) -> Optional[Path]:
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return Path((u,))
    parent = bfs_parents(g, u)
    if parent[v] is None:
        return None
    seq = [v]
    while seq[-1] != u:
        seq.append(parent[seq[-1]])  # type: ignore[arg-type]
    seq.reverse()
    return Path(tuple(seq))


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def classify_structure(g: Graph) -> Structure:
    delta = max((len(a) for a in g.adjacency), default=0)
    ncomp = len(components(g))
    if g.n > 0 and ncomp == 1 and g.m == g.n - 1:
        internal = sum(1 for a in g.adjacency if len(a) >= 2)
        return Structure("star" if internal <= 1 else "tree", delta)
    if g.m == g.n - ncomp:
        return Structure("forest", delta)
    return Structure("general", delta)


def is_tree(g: Graph) -> bool:
    return classify_structure(g).is_tree


def build_request_graph(r: RequestSet) -> RequestGraph:
    if len(r) == 0:
        raise GraphError("empty request set")
    labels = tuple(r.endpoints())
    index = {h: i for i, h in enumerate(labels)}
    g = Graph.from_edges(len(labels), [(index[a], index[b]) for a, b in r.pairs])
    return RequestGraph(g, labels)


def root_tree(h: RequestGraph | Graph, root: Optional[int] = None) -> RootedTree:
    """Root a tree at ``root`` (host id; defaults to the smallest vertex).

    Children are listed in ascending id order and the post-order visits them
    in that order.
    """
    if isinstance(h, RequestGraph):
        g, labels = h.graph, h.labels
    else:
        g, labels = h, tuple(range(h.n))
    if not classify_structure(g).is_tree:
        raise GraphError("graph is not a tree")
    index = {x: i for i, x in enumerate(labels)}
    if root is None:
        root = labels[0]
    if root not in index:
        raise GraphError(f"root {root} is not a vertex of the tree")

    parent: dict[int, Optional[int]] = {root: None}
    depth = {root: 0}
    children: dict[int, tuple[int, ...]] = {}
    order: list[int] = []
    # iterative DFS producing post-order
    stack: list[tuple[int, int]] = [(index[root], 0)]
    while stack:
        x, i = stack.pop()
        hx = labels[x]
        if i == 0:
            kids = tuple(sorted(labels[y] for y in g.adjacency[x] if labels[y] != parent[hx]))
            children[hx] = kids
            for k in kids:
                parent[k] = hx
                depth[k] = depth[hx] + 1
        kids = children[hx]
        if i < len(kids):
            stack.append((x, i + 1))
            stack.append((index[kids[i]], 0))
        else:
            order.append(hx)
    return RootedTree(root, parent, children, depth, tuple(order))
