"""Immutable simple connected graphs and their BFS distance profiles."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for invalid graph input."""


class InvalidEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotATree(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1`` with sorted adjacency tuples.

    Use :func:`build_graph` rather than the constructor; it validates the
    edge list and guarantees connectivity.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", sum(len(a) for a in self.adjacency) // 2)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def is_tree(self) -> bool:
        return self.m == self.n - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _adjacency(n: int, edges: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = (int(x) for x in e)
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) out of range for n={n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return tuple(tuple(sorted(s)) for s in nbrs)


def _is_connected(adjacency: Sequence[Sequence[int]]) -> bool:
    n = len(adjacency)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the connected simple graph it spans.

    Duplicate edges are merged. Raises :class:`InvalidEdge` for loops or
    out-of-range endpoints and :class:`Disconnected` if the graph has more
    than one component.
    """
    adjacency = _adjacency(n, edges)
    if not _is_connected(adjacency):
        raise Disconnected(f"graph on {n} vertices is not connected")
    return Graph(n, adjacency)


@dataclass(frozen=True)
class DistanceProfile:
    """All-pairs hop distances plus the per-vertex quantities derived from them."""

    graph: Graph
    dist: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]
    totdist: tuple[int, ...]
    deg: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def diam(self) -> int:
        return max(self.ecc)

    @property
    def rad(self) -> int:
        return min(self.ecc)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def distance_profile(g: Graph) -> DistanceProfile:
    """Run BFS from every vertex and collect eccentricities and total distances."""
    rows = tuple(tuple(bfs_distances(g, s)) for s in range(g.n))
    return DistanceProfile(
        graph=g,
        dist=rows,
        ecc=tuple(max(r) for r in rows),
        totdist=tuple(sum(r) for r in rows),
        deg=g.degrees,
    )


def is_self_centered(g: Graph | DistanceProfile) -> bool:
    p = g if isinstance(g, DistanceProfile) else distance_profile(g)
    return p.rad == p.diam


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) == 1


def is_caterpillar(g: Graph) -> bool:
    """True iff deleting every leaf of the tree ``g`` leaves a path (or at most one vertex)."""
    if not g.is_tree():
        raise NotATree(f"graph with n={g.n}, m={g.m} is not a tree")
    if g.n <= 2:
        return True
    inner = {v for v in range(g.n) if len(g.adjacency[v]) > 1}
    # The inner vertices of a tree induce a subtree, so it is a path iff every
    # inner degree is at most 2.
    return all(sum(1 for w in g.adjacency[v] if w in inner) <= 2 for v in inner)
