"""Exhaustive reference solvers used as ground truth on tiny instances.

None of these scale; each one refuses instances above its guard unless the
caller overrides it explicitly.  Guards can be tightened globally with the
``CERTDISP_ORACLE_LIMITS`` environment variable, e.g. ``n=6,m=8,r=3``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Iterable, Optional

from .dispersal import Dispersal, request_satisfied, satisfies
from .errors import CapExceededError, DisconnectedError
from .graph import Edge, Graph, RequestSet, canon
from .steiner import connects

DEFAULT_MCD_LIMITS = {"n": 7, "m": 9, "r": 4}
STEINER_MAX_EDGES = 12
COVER_MAX_VERTICES = 16


@dataclass
class OracleResult:
    cost: int
    witness: Any
    nodes: int = 0
    guards: dict[str, Any] = field(default_factory=dict)


def mcd_limits() -> dict[str, int]:
    limits = dict(DEFAULT_MCD_LIMITS)
    raw = os.environ.get("CERTDISP_ORACLE_LIMITS", "").strip()
    if raw:
        for item in raw.split(","):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in limits:
                raise ValueError(f"unknown oracle limit {key!r} in CERTDISP_ORACLE_LIMITS")
            limits[key] = min(limits[key], int(val))
    return limits


def simple_paths(g: Graph, u: int, v: int) -> list[tuple[Edge, ...]]:
    """All simple u-v paths as edge tuples, in lexicographic vertex order."""
    out: list[tuple[Edge, ...]] = []
    on_path = [False] * g.n
    stack: list[Edge] = []

    def walk(x: int) -> None:
        if x == v:
            out.append(tuple(stack))
            return
        on_path[x] = True
        for y in g.adjacency[x]:
            if not on_path[y]:
                stack.append(canon(x, y))
                walk(y)
                stack.pop()
        on_path[x] = False

    walk(u)
    return out


def candidate_pairs(g: Graph, r: RequestSet) -> set[tuple[int, Edge]]:
    """(vertex, edge) pairs worth considering: the vertex is an endpoint of a
    request and the edge lies on some simple path joining that request."""
    out = set()
    for u, v in r:
        for p in simple_paths(g, u, v):
            for e in p:
                out.add((u, e))
                out.add((v, e))
    return out


def brute_force_mcd(g: Graph, r: RequestSet, cost_cap: Optional[int] = None,
                    override: bool = False) -> OracleResult:
    """Minimum-cost dispersal by iterative deepening on the total cost.

    At each budget ``k`` a depth-first search takes the first unsatisfied
    request, picks one of its simple paths in G, and hands every edge of that
    path not already held by the two endpoints to one of them.  Any optimal
    dispersal contains, for each request, a path split between the endpoints,
    so following its choices keeps the partial dispersal inside it; the first
    budget that succeeds is therefore the optimum.  Only endpoint/simple-path
    pairs are ever created: edges outside every simple path of a request can
    be dropped from any solution without breaking a witness path.
    """
    limits = mcd_limits()
    if not override and (g.n > limits["n"] or g.m > limits["m"] or len(r) > limits["r"]):
        raise CapExceededError(
            f"oracle guard exceeded (n={g.n}, m={g.m}, |R|={len(r)}; limits {limits})")
    r.check_against(g)
    guards = {"limits": limits, "override": override}
    requests = list(r)
    if not requests:
        return OracleResult(0, Dispersal.empty(g.n), 0, guards)
    paths = {}
    for u, v in requests:
        ps = simple_paths(g, u, v)
        if not ps:
            raise DisconnectedError(f"request {(u, v)} has no path in the graph")
        paths[(u, v)] = sorted(ps, key=len)
    if cost_cap is None:
        cost_cap = g.m * len(requests)

    local: dict[int, set[Edge]] = {}
    nodes = 0

    def held(w: int) -> set[Edge]:
        return local.setdefault(w, set())

    def search(budget: int) -> bool:
        nonlocal nodes
        nodes += 1
        current = Dispersal(g.n, {w: frozenset(es) for w, es in local.items()})
        pending = next((q for q in requests if not request_satisfied(current, *q)), None)
        if pending is None:
            return True
        u, v = pending
        have = held(u) | held(v)
        for p in paths[pending]:
            missing = [e for e in p if e not in have]
            if len(missing) > budget:
                continue
            for owners in product((u, v), repeat=len(missing)):
                for w, e in zip(owners, missing):
                    local[w].add(e)
                if search(budget - len(missing)):
                    return True
                for w, e in zip(owners, missing):
                    local[w].discard(e)
        return False

    for k in range(cost_cap + 1):
        local.clear()
        if search(k):
            witness = Dispersal(g.n, {w: frozenset(es) for w, es in local.items()})
            assert satisfies(g, witness, r)
            return OracleResult(witness.cost(), witness, nodes, guards)
    raise CapExceededError(f"no feasible dispersal within cost cap {cost_cap}")


def full_enumeration_mcd(g: Graph, r: RequestSet) -> OracleResult:
    """Independent check for the tiniest graphs: every subset of all
    (vertex, edge) pairs, in increasing size."""
    pairs = [(w, e) for w in range(g.n) for e in g.sorted_edges()]
    if len(pairs) > 20:
        raise CapExceededError(f"{len(pairs)} vertex/edge pairs is too many to enumerate")
    nodes = 0
    for k in range(len(pairs) + 1):
        for chosen in combinations(pairs, k):
            nodes += 1
            local: dict[int, set[Edge]] = {}
            for w, e in chosen:
                local.setdefault(w, set()).add(e)
            d = Dispersal(g.n, {w: frozenset(es) for w, es in local.items()})
            if satisfies(g, d, r):
                return OracleResult(k, d, nodes, {"pairs": len(pairs)})
    raise DisconnectedError("request set cannot be satisfied")


def brute_force_steiner(g: Graph, terminals: Iterable[int],
                        max_edges: int = STEINER_MAX_EDGES) -> OracleResult:
    ts = frozenset(terminals)
    if g.m > max_edges:
        raise CapExceededError(f"{g.m} edges exceed the Steiner oracle guard {max_edges}")
    edges = g.sorted_edges()
    nodes = 0
    for k in range(len(edges) + 1):
        for chosen in combinations(edges, k):
            nodes += 1
            if connects(chosen, ts):
                return OracleResult(k, frozenset(chosen), nodes, {"max_edges": max_edges})
    raise DisconnectedError(f"terminals {sorted(ts)} are not connected")


def brute_force_vertex_cover(b, max_vertices: int = COVER_MAX_VERTICES) -> OracleResult:
    """Minimum vertex cover of a cut bipartite graph by subset enumeration."""
    verts = sorted(set(b.left) | set(b.right))
    if len(verts) > max_vertices:
        raise CapExceededError(f"{len(verts)} vertices exceed the cover oracle guard {max_vertices}")
    nodes = 0
    for k in range(len(verts) + 1):
        for chosen in combinations(verts, k):
            nodes += 1
            cs = set(chosen)
            if all(a in cs or c in cs for a, c in b.edges):
                return OracleResult(k, frozenset(cs), nodes, {"max_vertices": max_vertices})
    raise AssertionError("the full vertex set is always a cover")
