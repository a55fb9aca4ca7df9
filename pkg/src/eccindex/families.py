"""Constructors for the named graph families and the pendant-path operation.

Numbering conventions are fixed so that graph6 output is reproducible: the
star centre is vertex 0, paths run 0..n-1 in order, and a join lists the
left operand's vertices before the right operand's.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .graph import Graph, GraphError, _adjacency, build_graph, distance_profile

# A join operand may be a connected Graph or a raw (order, edge list) pair,
# which is how edgeless pieces such as CP_2 enter a join.
Operand = Union[Graph, tuple[int, Sequence[tuple[int, int]]]]


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    if n < 2:
        raise GraphError(f"star needs n >= 2, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def cocktail_party(k: int) -> Graph:
    """K_{2k} minus the perfect matching {2i, 2i+1}."""
    if k < 2:
        raise GraphError(f"cocktail party graph needs k >= 2, got {k}")
    n = 2 * k
    return build_graph(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if i // 2 != j // 2]
    )


def _operand(x: Operand) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(x, Graph):
        return x.n, x.edges()
    n, edges = x
    if n:
        _adjacency(n, edges)  # validates loops and ranges
    return n, [tuple(e) for e in edges]


def join(g: Operand, h: Operand) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    Operands may be disconnected (given as ``(n, edges)``), but the result
    must be connected.
    """
    ng, eg = _operand(g)
    nh, eh = _operand(h)
    if ng == 0 and nh == 0:
        raise GraphError("cannot join two empty graphs")
    edges = list(eg)
    edges += [(ng + u, ng + v) for u, v in eh]
    edges += [(u, ng + v) for u in range(ng) for v in range(nh)]
    return build_graph(ng + nh, edges)


def cp_join_complete(k: int, n: int) -> Graph:
    """CP_{2k} joined with K_{n-2k}; k = 0 gives K_n and 2k = n gives CP_{2k}."""
    if n < 1 or k < 0 or 2 * k > n:
        raise GraphError(f"need 0 <= 2k <= n, got k={k}, n={n}")
    if k == 1:
        raise GraphError("k=1 is not built here; use join((2, []), complete(n - 2))")
    if k == 0:
        g = complete(n)
    elif 2 * k == n:
        g = cocktail_party(k)
    else:
        g = join(cocktail_party(k), complete(n - 2 * k))
    if n > 1:
        p = distance_profile(g)
        assert all(e == n - d for e, d in zip(p.ecc, p.deg))
    return g


def caterpillar(spine_len: int, leaf_counts: Sequence[int]) -> Graph:
    """Path on ``spine_len`` vertices with ``leaf_counts[i]`` leaves hung on spine vertex i."""
    if spine_len < 1:
        raise GraphError(f"spine_len must be >= 1, got {spine_len}")
    if len(leaf_counts) != spine_len:
        raise GraphError(f"{len(leaf_counts)} leaf counts for a spine of {spine_len}")
    if any(c < 0 for c in leaf_counts):
        raise GraphError("leaf counts must be non-negative")
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    nxt = spine_len
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(nxt, edges)


@dataclass(frozen=True)
class PendantPaths:
    """G(p, q) together with the bookkeeping needed to merge its two paths."""

    graph: Graph
    base_order: int
    w: int
    p_path: tuple[int, ...]
    q_path: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.p_path)

    @property
    def q(self) -> int:
        return len(self.q_path)


def pendant_paths(g: Graph, w: int, p: int, q: int) -> PendantPaths:
    """Attach paths w v_1..v_p and w u_1..u_q to vertex ``w``.

    New vertices are numbered after g's, the P-path first.
    """
    if not 0 <= w < g.n:
        raise GraphError(f"vertex {w} out of range for n={g.n}")
    if not p >= q >= 0:
        raise GraphError(f"need p >= q >= 0, got p={p}, q={q}")
    edges = g.edges()
    p_path = tuple(range(g.n, g.n + p))
    q_path = tuple(range(g.n + p, g.n + p + q))
    for chain in (p_path, q_path):
        prev = w
        for v in chain:
            edges.append((prev, v))
            prev = v
    graph = build_graph(g.n + p + q, edges)
    return PendantPaths(graph, g.n, w, p_path, q_path)


def merge_pendant_paths(gpq: PendantPaths) -> PendantPaths:
    """G(p+q, 0) = G(p, q) - w u_1 + v_p u_1."""
    if gpq.q == 0:
        raise GraphError("q = 0: nothing to merge")
    u1 = gpq.q_path[0]
    tail = gpq.p_path[-1] if gpq.p else gpq.w
    edges = [e for e in gpq.graph.edges() if set(e) != {gpq.w, u1}]
    edges.append((tail, u1))
    return PendantPaths(
        build_graph(gpq.graph.n, edges), gpq.base_order, gpq.w,
        gpq.p_path + gpq.q_path, (),
    )


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def build(self) -> Graph:
        try:
            ctor = _BUILDERS[self.kind]
        except KeyError:
            raise GraphError(f"unknown family {self.kind!r}") from None
        return ctor(*self.params)


def _caterpillar_from_counts(*counts: int) -> Graph:
    return caterpillar(len(counts), counts)


def _pendant_on_single_vertex(p: int, q: int) -> Graph:
    return pendant_paths(build_graph(1, []), 0, p, q).graph


_BUILDERS = {
    "Path": path,
    "Star": star,
    "Complete": complete,
    "Cycle": cycle,
    "CocktailParty": cocktail_party,
    "CPJoinComplete": cp_join_complete,
    "Caterpillar": _caterpillar_from_counts,
    "PendantPathGraph": _pendant_on_single_vertex,
}

FAMILY_KINDS = tuple(_BUILDERS)
