"""Isomorphism-free enumeration of trees and connected graphs.

Trees come from level sequences of rooted trees (Beyer-Hedetniemi successor
order) kept only when the root is a centre and, for bicentral trees, the
rooting gives the larger canonical sequence. Connected graphs of order n are
grown from those of order n-1: every connected graph has a vertex whose
removal keeps it connected, so adding one vertex with every non-empty
neighbourhood to every class of order n-1 reaches every class of order n.
Duplicates are removed with :func:`canon.canonical_form`.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .canon import canonical_form, canonical_graph
from .graph import Graph, GraphError, build_graph
from .invariants import IndexReport, index_report

MAX_TREE_ORDER = 16
MAX_GRAPH_ORDER = 8

# Indexed by order starting at n = 0.
TREE_COUNTS = (1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235)
# Indexed by order starting at n = 1.
CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)


def _next_level_sequence(seq: list[int]) -> list[int] | None:
    p = len(seq) - 1
    while p > 0 and seq[p] <= 1:
        p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = seq[:p]
    gap = p - q
    for i in range(p, len(seq)):
        out.append(out[i - gap])
    return out


def _parents(seq: list[int]) -> list[int]:
    parents = [-1] * len(seq)
    last_at_level: dict[int, int] = {}
    for i, lvl in enumerate(seq):
        if i:
            parents[i] = last_at_level[lvl - 1]
        last_at_level[lvl] = i
    return parents


def _rooted_code(adj: list[list[int]], root: int) -> tuple[int, ...]:
    """Canonical level sequence of the tree rooted at ``root`` (subtrees in decreasing order)."""

    def code(v: int, parent: int, depth: int) -> tuple[int, ...]:
        kids = sorted((code(w, v, depth + 1) for w in adj[v] if w != parent), reverse=True)
        return (depth,) + tuple(itertools.chain.from_iterable(kids))

    return code(root, -1, 0)


def _centres(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _tree_from_sequence(seq: list[int]) -> Graph:
    parents = _parents(seq)
    return build_graph(len(seq), [(parents[i], i) for i in range(1, len(seq))])


def _all_trees(n: int) -> Iterator[Graph]:
    if n == 1:
        yield build_graph(1, [])
        return
    seq: list[int] | None = list(range(n))
    while seq is not None:
        parents = _parents(seq)
        adj: list[list[int]] = [[] for _ in range(n)]
        for i in range(1, n):
            adj[i].append(parents[i])
            adj[parents[i]].append(i)
        centres = _centres(adj)
        if 0 in centres:
            keep = True
            if len(centres) == 2:
                other = centres[1] if centres[0] == 0 else centres[0]
                keep = tuple(seq) >= _rooted_code(adj, other)
            if keep:
                yield _tree_from_sequence(seq)
        seq = _next_level_sequence(seq)


def all_trees(n: int) -> Iterator[Graph]:
    """Every unlabelled tree of order ``n`` exactly once, in a fixed order."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise GraphError(f"tree order must be in [1, {MAX_TREE_ORDER}], got {n}")
    return _all_trees(n)


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1, []),)
    seen: dict[tuple[int, int], Graph] = {}
    new = n - 1
    for g in _connected_graphs(n - 1):
        base = g.edges()
        for mask in range(1, 1 << (n - 1)):
            edges = base + [(v, new) for v in range(n - 1) if mask >> v & 1]
            h = build_graph(n, edges)
            key = canonical_form(h)
            if key not in seen:
                seen[key] = canonical_graph(h)
    return tuple(seen[k] for k in sorted(seen))


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """Every unlabelled connected graph of order ``n``, canonically labelled, sorted by certificate."""
    if not 1 <= n <= MAX_GRAPH_ORDER:
        raise GraphError(f"graph order must be in [1, {MAX_GRAPH_ORDER}], got {n}")
    return iter(_connected_graphs(n))


GraphPredicate = Callable[[Graph], bool]


def where(**criteria: int) -> GraphPredicate:
    """Predicate on IndexReport fields.

    Keys are field names (``diam=3``) or a field name with a ``_le``/``_ge``
    suffix (``max_deg_le=4``).
    """
    checks = []
    for key, value in criteria.items():
        if key.endswith("_le"):
            checks.append((key[:-3], lambda a, b=value: a <= b))
        elif key.endswith("_ge"):
            checks.append((key[:-3], lambda a, b=value: a >= b))
        else:
            checks.append((key, lambda a, b=value: a == b))
    for name, _ in checks:
        if name not in IndexReport.__dataclass_fields__:
            raise ValueError(f"unknown IndexReport field {name!r}")

    def pred(g: Graph) -> bool:
        rep = index_report(g, cross_check=False)
        return all(test(getattr(rep, name)) for name, test in checks)

    return pred


def filtered(stream, predicate: GraphPredicate | None) -> Iterator[Graph]:
    if predicate is None:
        return iter(stream)
    return (g for g in stream if predicate(g))


@dataclass
class EnumerationStream:
    """Restartable stream over one enumeration universe.

    Iterating starts from the beginning every time; ``chunk`` yields an index
    range so work can be partitioned across processes.
    """

    kind: str  # "trees" or "graphs"
    n: int
    predicate: GraphPredicate | None = None
    count_emitted: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("trees", "graphs"):
            raise ValueError(f"unknown universe {self.kind!r}")
        cap = MAX_TREE_ORDER if self.kind == "trees" else MAX_GRAPH_ORDER
        if not 1 <= self.n <= cap:
            raise GraphError(f"{self.kind} order must be in [1, {cap}], got {self.n}")

    def _source(self) -> Iterator[Graph]:
        src = all_trees(self.n) if self.kind == "trees" else all_connected_graphs(self.n)
        return filtered(src, self.predicate)

    def __iter__(self) -> Iterator[Graph]:
        self.count_emitted = 0
        for g in self._source():
            self.count_emitted += 1
            yield g

    def chunk(self, start: int, stop: int) -> Iterator[Graph]:
        return itertools.islice(self._source(), start, stop)


def default_workers() -> int:
    return int(os.environ.get("ECCINDEX_WORKERS", "1"))

