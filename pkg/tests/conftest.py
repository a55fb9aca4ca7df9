"""Independent oracles shared by the test modules.

Nothing here imports the code paths it is used to check: distances come from
Floyd-Warshall, canonical forms from brute force over all n! labelings, and
the graph universe from the networkx atlas.
"""

import itertools
from functools import lru_cache

import networkx as nx
import pytest

from eccindex.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return build_graph(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def floyd_warshall(g: Graph) -> list[list[int]]:
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return [[int(x) for x in row] for row in d]


def brute_canonical(n: int, edges) -> tuple[int, ...]:
    """Max adjacency bitstring over every labeling; exponential, n <= 6 only."""
    es = {frozenset(e) for e in edges}
    best = None
    for perm in itertools.permutations(range(n)):
        bits = tuple(
            int(frozenset((perm[i], perm[j])) in es) for j in range(1, n) for i in range(j)
        )
        if best is None or bits > best:
            best = bits
    return best


@lru_cache(maxsize=None)
def atlas_connected(n: int) -> tuple[Graph, ...]:
    """Connected graphs of order n (n <= 7) from the networkx graph atlas."""
    return tuple(
        from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)
    )


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return from_nx(nx.petersen_graph())


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k, (ok, detail) in sorted(test_acceptance.RESULTS.items()):
        terminalreporter.write_line(test_acceptance._line(k, ok, detail))
