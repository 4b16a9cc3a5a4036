"""Dispersals: per-vertex edge sets, their cost, and feasibility checks."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .graph import Edge, Graph, GraphError, RequestSet, canon


@dataclass(frozen=True, eq=False)
class Dispersal:
    """Local edge sets ``D_v`` indexed by host vertex.

    Only non-empty local sets are stored; ``local_set(v)`` returns the empty
    set for every other vertex.
    """

    n: int
    local: Mapping[int, frozenset[Edge]]

    def __post_init__(self) -> None:
        cleaned = {}
        for v, es in self.local.items():
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range [0, {self.n})")
            es = frozenset(canon(*e) for e in es)
            if es:
                cleaned[v] = es
        object.__setattr__(self, "local", dict(sorted(cleaned.items())))

    @classmethod
    def empty(cls, n: int) -> "Dispersal":
        return cls(n, {})

    @classmethod
    def from_mapping(cls, n: int, local: Mapping[int, Iterable[Edge]]) -> "Dispersal":
        return cls(n, {v: frozenset(es) for v, es in local.items()})

    def local_set(self, v: int) -> frozenset[Edge]:
        return self.local.get(v, frozenset())

    def cost(self) -> int:
        return cost(self)

    def vertices(self) -> list[int]:
        return list(self.local)

    def validate(self, g: Graph) -> None:
        if self.n != g.n:
            raise GraphError(f"dispersal over {self.n} vertices, graph has {g.n}")
        for v, es in self.local.items():
            for e in es:
                if e not in g.edges:
                    raise GraphError(f"D_{v} holds {e}, which is not an edge of the graph")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dispersal):
            return NotImplemented
        return self.n == other.n and self.local == other.local

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.local.items())))

    def canonical(self) -> tuple:
        """Sort key used for deterministic tie-breaking."""
        return tuple((v, tuple(sorted(es))) for v, es in self.local.items())


def cost(d: Dispersal) -> int:
    return sum(len(es) for es in d.local.values())


def union(d1: Dispersal, d2: Dispersal) -> Dispersal:
    if d1.n != d2.n:
        raise GraphError(f"host mismatch: {d1.n} vs {d2.n} vertices")
    merged: dict[int, frozenset[Edge]] = dict(d1.local)
    for v, es in d2.local.items():
        merged[v] = merged.get(v, frozenset()) | es
    return Dispersal(d1.n, merged)


def union_all(n: int, parts: Iterable[Dispersal]) -> Dispersal:
    merged: dict[int, set[Edge]] = defaultdict(set)
    for d in parts:
        if d.n != n:
            raise GraphError(f"host mismatch: {d.n} vs {n} vertices")
        for v, es in d.local.items():
            merged[v] |= es
    return Dispersal(n, {v: frozenset(es) for v, es in merged.items()})


def reachable(edges: Iterable[Edge], source: int) -> set[int]:
    """Vertices reachable from ``source`` using only ``edges``."""
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def request_satisfied(d: Dispersal, u: int, v: int) -> bool:
    return v in reachable(d.local_set(u) | d.local_set(v), u)


def first_violation(g: Graph, d: Dispersal, r: RequestSet) -> Optional[Edge]:
    """Smallest request not satisfied by ``d``, or None if all are."""
    d.validate(g)
    for u, v in r:
        if not request_satisfied(d, u, v):
            return (u, v)
    return None


def satisfies(g: Graph, d: Dispersal, r: RequestSet) -> bool:
    return first_violation(g, d, r) is None


def connecting_point(g: Graph, d: Dispersal, u: int, v: int) -> Optional[int]:
    """Smallest vertex reachable from u inside D_u and from v inside D_v."""
    g.check_vertex(u)
    g.check_vertex(v)
    common = reachable(d.local_set(u), u) & reachable(d.local_set(v), v)
    return min(common) if common else None


def edge_multiplicity(d: Dispersal) -> dict[Edge, int]:
    """How many local sets hold each edge."""
    counts: dict[Edge, int] = defaultdict(int)
    for es in d.local.values():
        for e in es:
            counts[e] += 1
    return dict(counts)
