"""Seeded random instance generators."""

from __future__ import annotations

import heapq
import random
from typing import Optional

from .errors import CertDispError
from .formats import Instance
from .graph import Edge, Graph, RequestSet, canon

KINDS = ("tree-graph", "tree-request", "star-request")


def prufer_to_edges(seq: list[int], n: int) -> list[Edge]:
    """Decode a Prufer sequence of length n-2 into the edges of a labelled tree."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append(canon(leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append(canon(a, b))
    return edges


def random_tree(n: int, rng: random.Random) -> list[Edge]:
    """Uniformly random labelled tree on ``n`` vertices."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    return prufer_to_edges([rng.randrange(n) for _ in range(n - 2)], n)


def random_connected_graph(n: int, extra: int, rng: random.Random) -> list[Edge]:
    """Random spanning tree plus ``extra`` distinct non-tree edges."""
    edges = set(random_tree(n, rng))
    room = n * (n - 1) // 2 - len(edges)
    extra = min(extra, room)
    if extra > room // 2:
        pool = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
        edges.update(rng.sample(pool, extra))
    else:
        while extra:
            a, b = rng.randrange(n), rng.randrange(n)
            if a != b and canon(a, b) not in edges:
                edges.add(canon(a, b))
                extra -= 1
    return sorted(edges)


def random_pairs(n: int, k: int, rng: random.Random) -> list[Edge]:
    total = n * (n - 1) // 2
    if k > total:
        raise CertDispError(f"cannot draw {k} distinct requests on {n} vertices")
    if k > total // 2:
        pool = [(a, b) for a in range(n) for b in range(a + 1, n)]
        return rng.sample(pool, k)
    out: set[Edge] = set()
    while len(out) < k:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            out.add(canon(a, b))
    return sorted(out)


def random_bounded_tree(k: int, delta: int, rng: random.Random) -> list[tuple[int, int]]:
    """Random tree on ``0..k-1`` with every degree at most ``delta``."""
    degree = [0] * k
    edges = []
    for v in range(1, k):
        open_ = [u for u in range(v) if degree[u] < delta]
        u = rng.choice(open_)
        degree[u] += 1
        degree[v] += 1
        edges.append((u, v))
    return edges


def generate_instance(kind: str, n: int, seed: int, requests: Optional[int] = None,
                      delta: Optional[int] = None, extra_edges: Optional[int] = None) -> Instance:
    """Build a random instance.

    ``tree-graph``: uniform labelled tree plus ``requests`` distinct pairs.
    ``tree-request``: connected graph, request tree on ``requests + 1`` vertices
    with degree at most ``delta``.  ``star-request``: request star with
    ``delta`` leaves.  The same arguments always give the same instance.
    """
    if kind not in KINDS:
        raise CertDispError(f"unknown instance kind {kind!r}; choose from {KINDS}")
    if n < 2:
        raise CertDispError("need at least 2 vertices")
    rng = random.Random(seed)
    comment = f"generated kind={kind} n={n} seed={seed}"
    if kind == "tree-graph":
        k = n - 1 if requests is None else requests
        g = Graph.from_edges(n, random_tree(n, rng))
        r = RequestSet.from_pairs(random_pairs(n, k, rng), n)
        return Instance(g, r, (comment + f" requests={k}",))

    extra = n // 2 if extra_edges is None else extra_edges
    if kind == "star-request":
        leaves = 2 if delta is None else delta
        if leaves < 1 or leaves >= n:
            raise CertDispError(f"star degree {leaves} needs 1 <= delta < n={n}")
        g = Graph.from_edges(n, random_connected_graph(n, extra, rng))
        centre, *rest = rng.sample(range(n), leaves + 1)
        r = RequestSet.from_pairs([(centre, x) for x in rest], n)
        return Instance(g, r, (comment + f" delta={leaves}",))

    cap = 3 if delta is None else delta
    k = min(n - 1, 4) if requests is None else requests
    if cap < 1:
        raise CertDispError("degree cap must be positive")
    if cap >= n:
        raise CertDispError(f"degree cap {cap} needs to be below n={n}")
    if not 1 <= k <= n - 1:
        raise CertDispError(f"a request tree with {k} edges needs 1 <= k <= n-1 (n={n})")
    if cap == 1 and k > 1:
        raise CertDispError("degree cap 1 allows a single request only")
    g = Graph.from_edges(n, random_connected_graph(n, extra, rng))
    labels = rng.sample(range(n), k + 1)
    shape = random_bounded_tree(k + 1, cap, rng)
    r = RequestSet.from_pairs([(labels[a], labels[b]) for a, b in shape], n)
    return Instance(g, r, (comment + f" delta={cap} requests={k}",))
