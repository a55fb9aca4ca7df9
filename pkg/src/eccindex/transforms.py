"""Tree rewrites that drive the extremal arguments, as executable operations.

Each rewrite returns a new graph (vertex numbering preserved) and a trace of
the index changes. Sign convention: ``delta_xi_d = before.xi_d - after.xi_d``,
so a positive ``delta_difference`` means xi_d - xi_c went down.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import merge_pendant_paths, pendant_paths
from .graph import Graph, GraphError, NotATree, build_graph, distance_profile, is_caterpillar
from .invariants import IndexReport, index_report


@dataclass(frozen=True)
class TransformTrace:
    before: IndexReport
    after: IndexReport
    moved_set_size: int

    @property
    def delta_xi_d(self) -> int:
        return self.before.xi_d - self.after.xi_d

    @property
    def delta_xi_c(self) -> int:
        return self.before.xi_c - self.after.xi_c

    @property
    def delta_difference(self) -> int:
        return self.delta_xi_d - self.delta_xi_c

    def to_dict(self) -> dict:
        return {
            "before": self.before.to_dict(),
            "after": self.after.to_dict(),
            "delta_xi_d": self.delta_xi_d,
            "delta_xi_c": self.delta_xi_c,
            "moved_set_size": self.moved_set_size,
        }


def _require_tree(t: Graph) -> None:
    if not t.is_tree():
        raise NotATree(f"graph with n={t.n}, m={t.m} is not a tree")


def _move(t: Graph, src: int, dst: int, moved: list[int]) -> Graph:
    ms = set(moved)
    edges = [(a, b) for a, b in t.edges() if not ({a, b} & ms and src in (a, b))]
    edges += [(dst, x) for x in moved]
    return build_graph(t.n, edges)


def shift_leaves_toward_spine(t: Graph, u: int, v: int) -> tuple[Graph, TransformTrace]:
    """Re-hang the leaves S = N(u) - {v} from ``u`` onto its neighbour ``v``.

    (u, v) must be one of :func:`leaf_shift_candidates`, i.e. u sits one
    level above the deepest vertices of a branch hanging off a diametral path.
    """
    _require_tree(t)
    if not t.has_edge(u, v):
        raise GraphError(f"{u} and {v} are not adjacent")
    moved = [x for x in t.adjacency[u] if x != v]
    if not moved:
        raise GraphError(f"vertex {u} has no neighbours besides {v}")
    if any(len(t.adjacency[x]) != 1 for x in moved):
        raise GraphError(f"not every vertex of N({u}) - {{{v}}} is a leaf")
    if (u, v) not in leaf_shift_candidates(t):
        raise GraphError(f"({u}, {v}) is not below a diametral path at depth k - 1")
    t2 = _move(t, u, v, moved)
    return t2, TransformTrace(index_report(t), index_report(t2), len(moved))


def _tree_path(t: Graph, x: int, y: int) -> list[int]:
    parent = {x: -1}
    stack = [x]
    while stack:
        a = stack.pop()
        for b in t.adjacency[a]:
            if b not in parent:
                parent[b] = a
                stack.append(b)
    out = [y]
    while out[-1] != x:
        out.append(parent[out[-1]])
    return out[::-1]


def leaf_shift_candidates(t: Graph) -> list[tuple[int, int]]:
    """All (u, v) pairs matching the caterpillar argument's configuration.

    For some diametral path P and inner vertex z of P, let T_z be the branch
    hanging at z with depth k >= 2; u is a vertex of T_z at depth k - 1 with
    a child, and v is its neighbour towards z.
    """
    _require_tree(t)
    prof = distance_profile(t)
    d = prof.diam
    pairs: set[tuple[int, int]] = set()
    for x in range(t.n):
        for y in range(x + 1, t.n):
            if prof.dist[x][y] != d:
                continue
            spine = _tree_path(t, x, y)
            on_spine = set(spine)
            for z in spine[1:-1]:
                depth = {z: 0}
                toward = {z: -1}
                stack = [z]
                while stack:
                    a = stack.pop()
                    for b in t.adjacency[a]:
                        if b not in depth and b not in on_spine:
                            depth[b] = depth[a] + 1
                            toward[b] = a
                            stack.append(b)
                k = max(depth.values())
                if k < 2:
                    continue
                for u, du in depth.items():
                    if du == k - 1 and len(t.adjacency[u]) > 1:
                        pairs.add((u, toward[u]))
    return sorted(pairs)


def star_ward_candidates(t: Graph) -> list[tuple[int, int]]:
    """All (w, z) pairs accepted by :func:`star_ward_shift`."""
    _require_tree(t)
    prof = distance_profile(t)
    return [
        (w, z)
        for w in range(t.n)
        for z in t.adjacency[w]
        if _star_ward_ok(t, prof, w, z)
    ]


def _star_ward_ok(t: Graph, prof, w: int, z: int) -> bool:
    d = prof.diam
    if d < 3 or len(t.adjacency[w]) < 2:
        return False
    if d == 3:
        # No vertex has eccentricity d - 2 = 1 here; the two centres play the roles.
        return prof.ecc[w] == 2 and prof.ecc[z] == 2
    return prof.ecc[w] == d - 1 and prof.ecc[z] == d - 2


def star_ward_shift(t: Graph, w: int, z: int) -> tuple[Graph, TransformTrace]:
    """Move S = N(w) - {z} from ``w`` to ``z``.

    Requires diam >= 4 with ecc(w) = diam - 1 and ecc(z) = diam - 2, or
    diam = 3 with ``w`` and ``z`` the two centres.
    """
    _require_tree(t)
    if not t.has_edge(w, z):
        raise GraphError(f"{w} and {z} are not adjacent")
    prof = distance_profile(t)
    if not _star_ward_ok(t, prof, w, z):
        raise GraphError(
            f"eccentricity precondition fails: diam={prof.diam}, "
            f"ecc({w})={prof.ecc[w]}, ecc({z})={prof.ecc[z]}"
        )
    moved = [x for x in t.adjacency[w] if x != z]
    t2 = _move(t, w, z, moved)
    return t2, TransformTrace(index_report(t), index_report(t2), len(moved))


def star_ward_bound(n: int, s: int) -> int:
    """Lower bound on the drop of xi_d - xi_c under one star-ward shift."""
    return 5 * s * (n - s - 3) + 2 * s * (n - 1) - (2 * n - 3)


def iterate_to_star(t: Graph, max_steps: int | None = None) -> tuple[Graph, list[TransformTrace]]:
    """Apply the first available star-ward shift until none applies."""
    traces = []
    limit = t.n if max_steps is None else max_steps
    while True:
        cands = star_ward_candidates(t)
        if not cands:
            return t, traces
        if len(traces) >= limit:
            raise RuntimeError(f"no fixed point after {limit} star-ward shifts")
        t, tr = star_ward_shift(t, *cands[0])
        traces.append(tr)


def iterate_to_caterpillar(t: Graph, max_steps: int | None = None) -> tuple[Graph, list[TransformTrace]]:
    traces = []
    limit = t.n * t.n if max_steps is None else max_steps
    while not is_caterpillar(t):
        cands = leaf_shift_candidates(t)
        if not cands or len(traces) >= limit:
            raise RuntimeError("stuck before reaching a caterpillar")
        t, tr = shift_leaves_toward_spine(t, *cands[0])
        traces.append(tr)
    return t, traces


@dataclass(frozen=True)
class MergeTrace(TransformTrace):
    """Trace of G(p, q) -> G(p+q, 0), with the two bounds on the increases.

    ``before`` is G(p, q), ``after`` is G(p+q, 0); the lemma bounds concern
    the increases ``gain_xi_d`` and ``gain_xi_c`` (the negated deltas).
    """

    illic_rhs_times6: int = 0
    xic_bound: int = 0

    @property
    def gain_xi_d(self) -> int:
        return -self.delta_xi_d

    @property
    def gain_xi_c(self) -> int:
        return -self.delta_xi_c

    @property
    def illic_holds(self) -> bool:
        return 6 * self.gain_xi_d >= self.illic_rhs_times6

    @property
    def xic_holds(self) -> bool:
        return self.gain_xi_c <= self.xic_bound

    def to_dict(self) -> dict:
        out = super().to_dict()
        out.update(
            gain_xi_d=self.gain_xi_d,
            gain_xi_c=self.gain_xi_c,
            illic_rhs_times6=self.illic_rhs_times6,
            xic_bound=self.xic_bound,
            illic_holds=self.illic_holds,
            xic_holds=self.xic_holds,
        )
        return out


def merge_paths_delta(g: Graph, w: int, p: int, q: int) -> MergeTrace:
    """Build G(p, q) and G(p+q, 0) at ``w`` and evaluate both lemma bounds.

    Requires ecc_G(w) >= p >= q >= 1. The xi_d bound is carried as six times
    its value so it stays integral.
    """
    if not 0 <= w < g.n:
        raise GraphError(f"vertex {w} out of range for n={g.n}")
    prof = distance_profile(g)
    r = prof.ecc[w]
    if not r >= p >= q >= 1:
        raise GraphError(f"need ecc(w) >= p >= q >= 1, got ecc(w)={r}, p={p}, q={q}")
    split = pendant_paths(g, w, p, q)
    merged = merge_pendant_paths(split)
    n = g.n
    rhs6 = p * q * (
        6 * prof.totdist[w]
        + p * (2 * p - 3)
        + q * (2 * q - 3)
        + 3 * p * q
        - 12 * r
        + 6 * n * (p + q + r + 1)
        + 6 * sum(prof.ecc)
    )
    return MergeTrace(
        before=index_report(split.graph),
        after=index_report(merged.graph),
        moved_set_size=q,
        illic_rhs_times6=rhs6,
        xic_bound=q * (3 * p + 2 * g.m - 1),
    )
