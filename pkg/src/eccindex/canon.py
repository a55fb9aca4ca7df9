"""Canonical forms for small graphs.

The certificate is the lexicographically largest upper-triangle adjacency
bitstring over all labelings reachable by individualization-refinement from
an isomorphism-invariant colour refinement. Twin vertices (same neighbourhood
apart from each other) are interchangeable by an automorphism, so only one
per twin class is individualized; that keeps stars, complete graphs and
cocktail-party graphs linear instead of factorial.
"""

from __future__ import annotations

from .graph import Graph

Partition = list[list[int]]


def _refine(adj: tuple[frozenset[int], ...], cells: Partition) -> Partition:
    """Equitable refinement of an ordered partition.

    Cells are split by each vertex's count of neighbours in every cell; new
    cells are ordered by that signature so the result is labeling-invariant.
    """
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        out: Partition = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[where[w]] += 1
                sig[v] = tuple(counts)
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            for key in sorted(groups):
                out.append(groups[key])
        if len(out) == len(cells):
            return out
        cells = out


def _twin_representatives(adj: tuple[frozenset[int], ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        nv = adj[v]
        if not any(nv - {u} == adj[u] - {v} for u in reps):
            reps.append(v)
    return reps


def _certificate(adj: tuple[frozenset[int], ...], order: list[int]) -> int:
    bits = 0
    n = len(order)
    for j in range(1, n):
        nj = adj[order[j]]
        for i in range(j):
            bits = (bits << 1) | (order[i] in nj)
    return bits


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order whose adjacency bitstring is the canonical certificate."""
    adj = tuple(frozenset(a) for a in g.adjacency)
    start = _refine(adj, [list(range(g.n))])
    best: tuple[int, list[int]] | None = None

    def search(cells: Partition) -> None:
        nonlocal best
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best is None or cert > best[0]:
                best = (cert, order)
            return
        cell = cells[target]
        for v in _twin_representatives(adj, cell):
            rest = [u for u in cell if u != v]
            search(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(start)
    assert best is not None
    return best[1]


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism invariant ``(n, bits)``; equal iff the graphs are isomorphic."""
    adj = tuple(frozenset(a) for a in g.adjacency)
    return g.n, _certificate(adj, canonical_labeling(g))


def relabel(g: Graph, order: list[int]) -> Graph:
    """Graph whose vertex i is ``order[i]`` of ``g``."""
    pos = {v: i for i, v in enumerate(order)}
    adjacency = tuple(tuple(sorted(pos[w] for w in g.adjacency[v])) for v in order)
    return Graph(g.n, adjacency)


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)
