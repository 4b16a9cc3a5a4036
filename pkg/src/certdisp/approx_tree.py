"""Tree request sets via two star forests.

Root the request tree and split its edges by the depth parity of the upper
endpoint.  Within one parity class every vertex keeps only its child edges, so
each class is a disjoint union of stars; each star is solved on its own and
the two class solutions are merged.  Each class alone costs at most the
optimum of the full instance, so the merge is within twice the star solver's
own factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .dispersal import Dispersal, union, union_all
from .errors import GraphError
from .graph import (Edge, RequestSet, Graph, RootedTree, build_request_graph,
                    classify_structure, components, root_tree)
from .steiner import DEFAULT_TERMINAL_CAP, SteinerSolver, solve_star


@dataclass(frozen=True)
class ParityPartition:
    r0: RequestSet
    r1: RequestSet
    parity: Mapping[Edge, int]
    upper: Mapping[Edge, int]  # shallower endpoint of each request


@dataclass(frozen=True)
class TreeApproxResult:
    dispersal: Dispersal
    d0: Dispersal
    d1: Dispersal
    partition: ParityPartition


def _partition(parent: Mapping[int, Optional[int]], depth: Mapping[int, int],
               r: RequestSet) -> ParityPartition:
    parity: dict[Edge, int] = {}
    upper: dict[Edge, int] = {}
    for a, b in r:
        if parent.get(b) == a:
            top = a
        elif parent.get(a) == b:
            top = b
        else:
            raise GraphError(f"request {(a, b)} is not a parent-child edge of the rooted tree")
        parity[(a, b)] = depth[top] % 2
        upper[(a, b)] = top
    r0 = RequestSet(frozenset(e for e, p in parity.items() if p == 0))
    r1 = RequestSet(frozenset(e for e, p in parity.items() if p == 1))
    return ParityPartition(r0, r1, parity, upper)


def depth_parity_partition(t: RootedTree, r: RequestSet) -> ParityPartition:
    return _partition(t.parent, t.depth, r)


def root_forest(r: RequestSet, root: Optional[int] = None) -> list[RootedTree]:
    """Root every tree of H_R, at ``root`` where it belongs, else at its smallest vertex."""
    h = build_request_graph(r)
    shape = classify_structure(h.graph)
    if shape.kind == "general":
        raise GraphError("request graph contains a cycle")
    trees = []
    for comp in components(h.graph):
        hosts = [h.labels[i] for i in comp]
        host_set = set(hosts)
        pairs = [e for e in r.pairs if e[0] in host_set]
        sub = build_request_graph(RequestSet(frozenset(pairs)))
        pick = root if root in hosts else hosts[0]
        trees.append(root_tree(sub, pick))
    return trees


def star_components(r_i: RequestSet) -> list[RequestSet]:
    if len(r_i) == 0:
        return []
    h = build_request_graph(r_i)
    out = []
    for comp in components(h.graph):
        hosts = {h.labels[i] for i in comp}
        part = RequestSet(frozenset(e for e in r_i.pairs if e[0] in hosts))
        if classify_structure(build_request_graph(part).graph).kind != "star":
            raise GraphError(f"component {sorted(hosts)} is not a star")
        out.append(part)
    return sorted(out, key=lambda s: min(s.pairs))


def solve_tree_approx_detail(g: Graph, r: RequestSet, mode: str = "auto",
                             root: Optional[int] = None,
                             cap: int = DEFAULT_TERMINAL_CAP) -> TreeApproxResult:
    if len(r) == 0:
        empty = Dispersal.empty(g.n)
        part = ParityPartition(r, r, {}, {})
        return TreeApproxResult(empty, empty, empty, part)
    r.check_against(g)
    parent: dict[int, Optional[int]] = {}
    depth: dict[int, int] = {}
    for t in root_forest(r, root):
        parent.update(t.parent)
        depth.update(t.depth)
    part = _partition(parent, depth, r)
    solver = SteinerSolver(g, cap)
    sides = []
    for r_i in (part.r0, part.r1):
        pieces = []
        for star in star_components(r_i):
            hub = part.upper[min(star.pairs)]
            pieces.append(solve_star(g, star, mode, cap, center=hub, solver=solver))
        sides.append(union_all(g.n, pieces))
    d0, d1 = sides
    return TreeApproxResult(union(d1, d0), d0, d1, part)


def solve_tree_approx(g: Graph, r: RequestSet, mode: str = "auto",
                      root: Optional[int] = None,
                      cap: int = DEFAULT_TERMINAL_CAP) -> Dispersal:
    return solve_tree_approx_detail(g, r, mode, root, cap).dispersal
