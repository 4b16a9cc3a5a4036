import random

import pytest
from hypothesis import given, settings, strategies as st

from certdisp.errors import GraphError
from certdisp.generate import random_tree
from certdisp.graph import (Graph, RequestSet, build_request_graph, classify_structure,
                            root_tree, shortest_path)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


P3 = path_graph(3)
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError, match="self-loop"):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError, match="duplicate"):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError, match="out of range"):
        Graph.from_edges(3, [(0, 3)])


def test_adjacency_matches_edges():
    assert C4.neighbors(0) == (1, 3)
    assert C4.edges == {(0, 1), (1, 2), (2, 3), (0, 3)}


def test_shortest_path_examples():
    p = shortest_path(P3, 0, 2)
    assert p.vertices == (0, 1, 2) and p.length == 2
    assert shortest_path(C4, 3, 3).vertices == (3,)
    assert shortest_path(C4, 3, 3).length == 0


def test_shortest_path_tie_break_on_cycle():
    # both 0-1-2 and 0-3-2 have length 2; the lower neighbour wins
    candidates = [(0, 1, 2), (0, 3, 2)]
    assert all(len(c) - 1 == 2 for c in candidates)
    assert shortest_path(C4, 0, 2).vertices == min(candidates)


def test_shortest_path_disconnected_and_range():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert shortest_path(g, 0, 3) is None
    with pytest.raises(GraphError):
        shortest_path(g, 0, 9)


@pytest.mark.parametrize("g, kind, delta", [
    (K13, "star", 3),
    (path_graph(4), "tree", 2),
    (Graph.from_edges(4, [(0, 1), (2, 3)]), "forest", 1),
    (C4, "general", 2),
    (path_graph(2), "star", 1),
])
def test_classify_structure(g, kind, delta):
    s = classify_structure(g)
    assert (s.kind, s.max_degree) == (kind, delta)


def test_build_request_graph():
    h = build_request_graph(RequestSet.from_pairs([(0, 5), (0, 7)]))
    assert h.labels == (0, 5, 7)
    assert classify_structure(h.graph).kind == "star"
    assert h.host_edges() == [(0, 5), (0, 7)]

    single = build_request_graph(RequestSet.from_pairs([(1, 2)]))
    assert single.graph.m == 1

    path = build_request_graph(RequestSet.from_pairs([(0, 1), (1, 2), (2, 3)]))
    assert path.max_degree() == 2
    with pytest.raises(GraphError):
        build_request_graph(RequestSet.from_pairs([]))


def test_request_set_normalises():
    r = RequestSet.from_pairs([(2, 1), (1, 2), (0, 3)])
    assert list(r) == [(0, 3), (1, 2)]
    assert (2, 1) in r
    with pytest.raises(GraphError):
        RequestSet.from_pairs([(1, 2), (2, 1)], strict=True)
    with pytest.raises(GraphError):
        RequestSet.from_pairs([(4, 4)])


def test_root_tree_examples():
    a, b, c = 10, 11, 12
    h = build_request_graph(RequestSet.from_pairs([(a, b), (b, c)]))
    t = root_tree(h, a)
    assert [t.depth[x] for x in (a, b, c)] == [0, 1, 2]
    assert t.order == (c, b, a)

    mid = root_tree(h, b)
    assert mid.children[b] == (a, c)
    assert mid.gamma(b) == 2

    star = root_tree(build_request_graph(RequestSet.from_pairs([(0, 3), (0, 1), (0, 2)])), 0)
    assert star.order == (1, 2, 3, 0)
    assert all(star.depth[x] == 1 for x in (1, 2, 3))


def test_root_tree_rejects_non_tree():
    h = build_request_graph(RequestSet.from_pairs([(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(GraphError):
        root_tree(h)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 30), seed=st.integers(0, 10**6), root_pick=st.integers(0, 10**6))
def test_rooted_tree_replay(n, seed, root_pick):
    g = Graph.from_edges(n, random_tree(n, random.Random(seed)))
    assert classify_structure(g).is_tree
    root = root_pick % n
    t = root_tree(g, root)
    assert t.depth[root] == 0 and t.parent[root] is None
    index = {v: i for i, v in enumerate(t.order)}
    assert sorted(t.order) == list(range(n))
    for u in range(n):
        if u != root:
            assert g.has_edge(u, t.parent[u])
            assert t.depth[u] == t.depth[t.parent[u]] + 1
        for c in t.children[u]:
            assert index[c] < index[u]


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 12), seed=st.integers(0, 10**6), extra=st.integers(0, 10))
def test_shortest_path_symmetric(n, seed, extra):
    from certdisp.generate import random_connected_graph
    rng = random.Random(seed)
    g = Graph.from_edges(n, random_connected_graph(n, extra, rng))
    u, v = rng.randrange(n), rng.randrange(n)
    p, q = shortest_path(g, u, v), shortest_path(g, v, u)
    assert p.length == q.length
    for a, b in p.edges():
        assert g.has_edge(a, b)
