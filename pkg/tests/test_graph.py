import pytest
from hypothesis import given, settings, strategies as st

from eccindex.enumeration import all_connected_graphs, all_trees
from eccindex.families import complete, cycle, path, star
from eccindex.graph import (
    Disconnected,
    GraphError,
    InvalidEdge,
    NotATree,
    build_graph,
    distance_profile,
    is_caterpillar,
    is_regular,
    is_self_centered,
)

from conftest import floyd_warshall


def test_build_k2():
    g = build_graph(2, [(0, 1)])
    assert g.m == 1 and g.adjacency == ((1,), (0,))


def test_build_p4():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.adjacency == ((1,), (0, 2), (1, 3), (2,))


def test_build_deduplicates():
    g = build_graph(3, [(0, 1), (1, 0), (1, 2), (0, 1)])
    assert g.m == 2


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (4, [(0, 1), (2, 3)], Disconnected),
        (3, [(0, 0), (0, 1), (1, 2)], InvalidEdge),
        (3, [(0, 3)], InvalidEdge),
        (0, [], GraphError),
        (2, [], Disconnected),
    ],
)
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


@pytest.mark.parametrize(
    "g, ecc, totdist",
    [
        (path(4), (3, 2, 2, 3), (6, 4, 4, 6)),
        (complete(5), (1,) * 5, (4,) * 5),
        (cycle(5), (2,) * 5, (6,) * 5),
        (build_graph(1, []), (0,), (0,)),
    ],
)
def test_distance_profile_examples(g, ecc, totdist):
    p = distance_profile(g)
    assert p.ecc == ecc
    assert p.totdist == totdist


def test_self_centered_and_regular():
    assert is_self_centered(cycle(5))
    assert not is_self_centered(path(4))
    assert is_self_centered(build_graph(1, []))
    assert is_regular(cycle(5))
    assert not is_regular(star(4))
    assert is_regular(complete(2))


def _spider(legs: int, length: int):
    edges, nxt = [], 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return build_graph(nxt, edges)


def _caterpillar_by_definition(t) -> bool:
    # A tree is a caterpillar iff it contains no subdivided claw (spider with three legs of length 2).
    n = t.n
    adj = t.adjacency
    for c in range(n):
        arms = [v for v in adj[c] if any(w != c for w in adj[v])]
        if len(arms) >= 3:
            return False
    return True


def test_caterpillar_examples():
    assert is_caterpillar(star(5))
    assert not is_caterpillar(_spider(3, 2))
    assert is_caterpillar(path(6))
    with pytest.raises(NotATree):
        is_caterpillar(cycle(4))


@pytest.mark.parametrize("n", range(1, 11))
def test_caterpillar_matches_forbidden_subtree_oracle(n):
    for t in all_trees(n):
        assert is_caterpillar(t) == _caterpillar_by_definition(t)


@pytest.mark.parametrize("n", range(1, 8))
def test_bfs_matches_floyd_warshall(n):
    for g in all_connected_graphs(n):
        p = distance_profile(g)
        assert [list(r) for r in p.dist] == floyd_warshall(g)


@pytest.mark.slow
def test_bfs_matches_floyd_warshall_order_8():
    for g in all_connected_graphs(8):
        assert [list(r) for r in distance_profile(g).dist] == floyd_warshall(g)


@st.composite
def connected_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    # random spanning tree keeps the graph connected
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges += draw(st.lists(st.sampled_from(pairs), max_size=2 * n))
    return build_graph(n, edges)


@settings(max_examples=200, deadline=None)
@given(connected_graphs())
def test_profile_properties(g):
    p = distance_profile(g)
    n = g.n
    for u in range(n):
        assert p.dist[u][u] == 0
        for v in range(n):
            assert p.dist[u][v] == p.dist[v][u]
            if u != v:
                assert p.dist[u][v] >= 1
                assert (p.dist[u][v] == 1) == g.has_edge(u, v)
            for w in range(n):
                assert p.dist[u][w] <= p.dist[u][v] + p.dist[v][w]
        assert p.ecc[u] == max(p.dist[u])
        assert p.totdist[u] == sum(p.dist[u])
        if n > 1:
            assert p.ecc[u] <= n - p.deg[u]
    assert sum(p.deg) == 2 * g.m
    assert p.rad <= p.diam <= 2 * p.rad
