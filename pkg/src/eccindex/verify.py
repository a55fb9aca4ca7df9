"""Every bound on xi_d and xi_c as a per-graph check, plus the suite runner.

Each check returns a :class:`TheoremVerdict`. Where a theorem names the
graphs attaining equality, two predicates are evaluated: the per-vertex
condition the argument turns on, and membership in the named family
(decided by canonical form). The verdict is characterization-consistent only
if equality, the per-vertex condition and the family membership all agree.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable

from .canon import canonical_form
from .families import cocktail_party, complete, cp_join_complete, join, path, star
from .formats import emit_graph6
from .graph import DistanceProfile, Graph, distance_profile, is_caterpillar
from .invariants import IndexReport, report_from_profile
from .transforms import merge_paths_delta

GRAPH_THEOREMS = (
    "T2i", "T2ii", "T3star", "T3path",
    "T4sum_upper", "T4sum_lower", "T4twothirds", "T4radius",
)
LEMMA_THEOREMS = ("L_illic", "L_xic")
THEOREM_IDS = GRAPH_THEOREMS[:4] + ("T3cat",) + GRAPH_THEOREMS[4:] + LEMMA_THEOREMS


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one theorem on one graph.

    ``direction`` is ``"ge"`` for lower bounds (lhs >= rhs) and ``"le"`` for
    upper bounds; ``slack`` is oriented so that it is non-negative whenever
    the bound holds. ``characterization_expected`` is None for bounds that
    come without an equality characterization.
    """

    theorem_id: str
    graph_id: str
    lhs: int
    rhs: int
    direction: str
    applicable: bool = True
    characterization_expected: bool | None = None
    condition: bool | None = None
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def slack(self) -> int:
        return self.lhs - self.rhs if self.direction == "ge" else self.rhs - self.lhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    @property
    def violated(self) -> bool:
        return self.applicable and self.slack < 0

    @property
    def characterization_ok(self) -> bool:
        if not self.applicable or self.characterization_expected is None:
            return True
        ok = self.equality == self.characterization_expected
        if self.condition is not None:
            ok = ok and self.condition == self.characterization_expected
        return ok

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(slack=self.slack, equality=self.equality,
                 characterization_ok=self.characterization_ok)
        return d


def _not_applicable(tid: str, gid: str, why: str) -> TheoremVerdict:
    return TheoremVerdict(tid, gid, 0, 0, "ge", applicable=False, detail={"reason": why})


@dataclass
class _Context:
    graph: Graph
    profile: DistanceProfile
    report: IndexReport
    gid: str

    @classmethod
    def of(cls, g: Graph) -> "_Context":
        p = distance_profile(g)
        return cls(g, p, report_from_profile(p), emit_graph6(g))


@lru_cache(maxsize=None)
def _canon_set(name: str, n: int) -> frozenset:
    forms = set()
    if name == "cp_join":
        if n == 4:
            forms.add(canonical_form(path(4)))
        for k in range(n // 2 + 1):
            if k == 1:
                if n >= 3:
                    forms.add(canonical_form(join((2, []), complete(n - 2))))
            elif not (2 * k == n and k < 2):
                forms.add(canonical_form(cp_join_complete(k, n)))
    elif name == "radius":
        forms.add(canonical_form(complete(n)))
        if n % 2 == 0 and n >= 4:
            forms.add(canonical_form(cocktail_party(n // 2)))
    elif name == "star":
        forms.add(canonical_form(star(n)))
    elif name == "path":
        forms.add(canonical_form(path(n)))
    return frozenset(forms)


def _in_family(name: str, g: Graph) -> bool:
    return canonical_form(g) in _canon_set(name, g.n)


def _check_T2i(c: _Context) -> TheoremVerdict:
    r, p = c.report, c.profile
    n, delta = r.n, r.max_deg
    per_vertex = all(D - d == 2 * (n - 1 - delta) for D, d in zip(p.totdist, p.deg))
    return TheoremVerdict(
        "T2i", c.gid, r.difference, 2 * (n - 1 - delta) * r.ecc_total, "ge",
        characterization_expected=len(set(p.deg)) == 1 and r.diam <= 2,
        condition=per_vertex,
    )


def _check_T2ii(c: _Context) -> TheoremVerdict:
    r, p = c.report, c.profile
    n = r.n
    rhs = 2 * n * (r.wiener - r.m) + r.zagreb1 - r.degree_distance
    per_vertex = all(e == n - d for e, d in zip(p.ecc, p.deg))
    return TheoremVerdict(
        "T2ii", c.gid, r.difference, rhs, "le",
        characterization_expected=_in_family("cp_join", c.graph),
        condition=per_vertex,
    )


def star_bound(n: int) -> int:
    return 4 * n * n - 12 * n + 8


def path_bound_times96(n: int) -> int:
    """96 * (xi_d(P_n) - xi_c(P_n)) via the closed-form parity polynomials."""
    if n % 2:
        return 25 * n**4 - 16 * n**3 - 178 * n**2 + 304 * n - 135
    return 25 * n**4 - 16 * n**3 - 172 * n**2 + 304 * n - 192


def _check_T3star(c: _Context) -> TheoremVerdict:
    r = c.report
    if not c.graph.is_tree() or r.n < 3:
        return _not_applicable("T3star", c.gid, "needs a tree with n >= 3")
    return TheoremVerdict(
        "T3star", c.gid, r.difference, star_bound(r.n), "ge",
        characterization_expected=_in_family("star", c.graph),
        condition=r.max_deg == r.n - 1,
    )


def _check_T3path(c: _Context) -> TheoremVerdict:
    r = c.report
    if not c.graph.is_tree() or r.n < 2:
        return _not_applicable("T3path", c.gid, "needs a tree with n >= 2")
    return TheoremVerdict(
        "T3path", c.gid, 96 * r.difference, path_bound_times96(r.n), "le",
        characterization_expected=_in_family("path", c.graph),
        condition=r.max_deg <= 2,
    )


def _sum_bounds(r: IndexReport) -> tuple[int, int]:
    base = 2 * (r.n - 1) * r.ecc_total
    excess = r.wiener + r.m - 2 * comb(r.n, 2)
    return base + 2 * r.rad * excess, base + 2 * r.diam * excess


def _check_T4sum(c: _Context, side: str) -> TheoremVerdict:
    r = c.report
    lower, upper = _sum_bounds(r)
    self_centered = r.rad == r.diam
    if side == "upper":
        return TheoremVerdict("T4sum_upper", c.gid, r.xi_d + r.xi_c, upper, "le",
                              characterization_expected=self_centered,
                              condition=all(e == r.diam for e in c.profile.ecc))
    return TheoremVerdict("T4sum_lower", c.gid, r.xi_d + r.xi_c, lower, "ge",
                          characterization_expected=self_centered,
                          condition=all(e == r.rad for e in c.profile.ecc))


def sum_bound_equality_exact(g: Graph | DistanceProfile, side: str) -> bool:
    """Exact equality condition for the xi_d + xi_c bounds.

    Only pairs at distance >= 3 carry weight in the gap, so equality holds
    iff every such pair has ecc(u) + ecc(v) equal to 2*diam (upper side) or
    2*rad (lower side). Self-centered graphs satisfy this, but so does every
    graph of diameter <= 2.
    """
    p = g if isinstance(g, DistanceProfile) else distance_profile(g)
    target = 2 * (p.diam if side == "upper" else p.rad)
    return all(
        p.ecc[u] + p.ecc[v] == target
        for u in range(p.n)
        for v in range(u + 1, p.n)
        if p.dist[u][v] >= 3
    )


def _check_T4twothirds(c: _Context) -> TheoremVerdict:
    r, p = c.report, c.profile
    n = r.n
    if 3 * r.max_deg > 2 * (n - 1):
        return _not_applicable("T4twothirds", c.gid, "max degree above 2(n-1)/3")
    expected = (
        r.rad == r.diam == 2 and len(set(p.deg)) == 1 and 3 * p.deg[0] == 2 * (n - 1)
    )
    per_vertex = all(e == 2 and 3 * d == 2 * (n - 1) for e, d in zip(p.ecc, p.deg))
    return TheoremVerdict("T4twothirds", c.gid, r.xi_d, 2 * r.xi_c, "ge",
                          characterization_expected=expected, condition=per_vertex)


def _check_T4radius(c: _Context) -> TheoremVerdict:
    r, p = c.report, c.profile
    target = r.n - 1 + comb(r.rad, 2)
    return TheoremVerdict(
        "T4radius", c.gid, r.xi_d, target * r.ecc_total, "ge",
        characterization_expected=_in_family("radius", c.graph),
        condition=all(D == target for D in p.totdist),
    )


_PER_GRAPH = {
    "T2i": _check_T2i,
    "T2ii": _check_T2ii,
    "T3star": _check_T3star,
    "T3path": _check_T3path,
    "T4sum_upper": lambda c: _check_T4sum(c, "upper"),
    "T4sum_lower": lambda c: _check_T4sum(c, "lower"),
    "T4twothirds": _check_T4twothirds,
    "T4radius": _check_T4radius,
}


def check(theorem_id: str, g: Graph) -> TheoremVerdict:
    """Run one per-graph theorem on ``g``; order-1 graphs are NotApplicable."""
    c = _Context.of(g)
    if g.n < 2:
        return _not_applicable(theorem_id, c.gid, "n < 2")
    return _PER_GRAPH[theorem_id](c)


def check_T2i(g: Graph) -> TheoremVerdict:
    return check("T2i", g)


def check_T2ii(g: Graph) -> TheoremVerdict:
    return check("T2ii", g)


def check_T3star(t: Graph) -> TheoremVerdict:
    return check("T3star", t)


def check_T3path(t: Graph) -> TheoremVerdict:
    return check("T3path", t)


def check_T4sum(g: Graph) -> tuple[TheoremVerdict, TheoremVerdict]:
    return check("T4sum_lower", g), check("T4sum_upper", g)


def check_T4twothirds(g: Graph) -> TheoremVerdict:
    return check("T4twothirds", g)


def check_T4radius(g: Graph) -> TheoremVerdict:
    return check("T4radius", g)


def check_lemmas(g: Graph, w: int, p: int, q: int) -> tuple[TheoremVerdict, TheoremVerdict]:
    """Verdicts for the xi_d (L_illic) and xi_c (L_xic) bounds of one path merge."""
    tr = merge_paths_delta(g, w, p, q)
    gid = f"{emit_graph6(g)}:w={w},p={p},q={q}"
    return (
        TheoremVerdict("L_illic", gid, 6 * tr.gain_xi_d, tr.illic_rhs_times6, "ge"),
        TheoremVerdict("L_xic", gid, tr.gain_xi_c, tr.xic_bound, "le"),
    )


def check_L_illic(g: Graph, w: int, p: int, q: int) -> TheoremVerdict:
    return check_lemmas(g, w, p, q)[0]


def check_L_xic(g: Graph, w: int, p: int, q: int) -> TheoremVerdict:
    return check_lemmas(g, w, p, q)[1]


def lemma_instances(g: Graph, max_pq: int = 5) -> Iterable[tuple[int, int, int]]:
    ecc = distance_profile(g).ecc
    for w in range(g.n):
        for p in range(1, ecc[w] + 1):
            for q in range(1, p + 1):
                if p + q <= max_pq:
                    yield w, p, q


@dataclass(frozen=True)
class CaterpillarMinimum:
    n: int
    diam: int
    minimum: int
    caterpillar_minimum: int
    argmin: tuple[str, ...]
    argmin_caterpillar: tuple[bool, ...]

    @property
    def verdict(self) -> TheoremVerdict:
        return TheoremVerdict(
            "T3cat", f"trees:n={self.n},d={self.diam}", self.minimum,
            self.caterpillar_minimum, "ge",
            characterization_expected=True,
            detail={"argmin": list(self.argmin), "caterpillar": list(self.argmin_caterpillar)},
        )


def _caterpillar_minima(rows: Iterable[tuple[int, int, int, bool, str]]) -> list[CaterpillarMinimum]:
    groups: dict[tuple[int, int], list] = defaultdict(list)
    for n, d, diff, cat, gid in rows:
        groups[n, d].append((diff, cat, gid))
    out = []
    for (n, d), items in sorted(groups.items()):
        best = min(x[0] for x in items)
        cats = [x[0] for x in items if x[1]]
        arg = [x for x in items if x[0] == best]
        out.append(CaterpillarMinimum(
            n, d, best, min(cats) if cats else -1,
            tuple(x[2] for x in arg), tuple(x[1] for x in arg),
        ))
    return out


def check_T3cat(n: int, d: int) -> CaterpillarMinimum:
    """Minimum of xi_d - xi_c over trees of order n and diameter d, and over the caterpillars among them."""
    from .enumeration import all_trees

    rows = []
    for t in all_trees(n):
        c = _Context.of(t)
        if c.report.diam == d:
            rows.append((n, d, c.report.difference, is_caterpillar(t), c.gid))
    if not rows:
        raise ValueError(f"no tree of order {n} has diameter {d}")
    return _caterpillar_minima(rows)[0]


@dataclass
class TheoremTally:
    checked: int = 0
    equalities: int = 0
    violations: int = 0
    mismatches: int = 0
    not_applicable: int = 0


@dataclass
class SuiteReport:
    universe: str
    n: int | None
    graphs: int = 0
    tallies: dict[str, TheoremTally] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    caterpillar_minima: list[CaterpillarMinimum] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, v: TheoremVerdict) -> None:
        t = self.tallies.setdefault(v.theorem_id, TheoremTally())
        if not v.applicable:
            t.not_applicable += 1
            return
        t.checked += 1
        t.equalities += v.equality
        if v.violated:
            t.violations += 1
            self.failures.append({"theorem": v.theorem_id, "graph": v.graph_id,
                                  "kind": "violation", "lhs": v.lhs, "rhs": v.rhs})
        elif not v.characterization_ok:
            t.mismatches += 1
            self.failures.append({
                "theorem": v.theorem_id, "graph": v.graph_id, "kind": "characterization",
                "equality": v.equality, "expected": v.characterization_expected,
                "condition": v.condition,
            })

    def summary(self) -> dict:
        return {
            "universe": self.universe,
            "n": self.n,
            "graphs": self.graphs,
            "ok": self.ok,
            "theorems": {k: asdict(v) for k, v in sorted(self.tallies.items())},
            "failures": len(self.failures),
            "first_failures": sorted(self.failures, key=lambda f: (f["theorem"], f["graph"]))[:20],
        }

    def to_json(self) -> str:
        return json.dumps(self.summary(), indent=2)


def _run_chunk(args: tuple[tuple[str, ...], list[Graph], int]) -> tuple[list[TheoremVerdict], list[tuple]]:
    theorem_ids, graphs, max_pq = args
    verdicts: list[TheoremVerdict] = []
    tree_rows = []
    for g in graphs:
        c = _Context.of(g)
        for tid in theorem_ids:
            if tid in _PER_GRAPH:
                verdicts.append(
                    _not_applicable(tid, c.gid, "n < 2") if g.n < 2 else _PER_GRAPH[tid](c)
                )
        if "L_illic" in theorem_ids or "L_xic" in theorem_ids:
            for w, p, q in lemma_instances(g, max_pq):
                for v in check_lemmas(g, w, p, q):
                    if v.theorem_id in theorem_ids:
                        verdicts.append(v)
        if "T3cat" in theorem_ids and g.is_tree() and g.n >= 3:
            tree_rows.append((g.n, c.report.diam, c.report.difference, is_caterpillar(g), c.gid))
    return verdicts, tree_rows


def run_suite(
    theorem_ids: Iterable[str],
    stream: Iterable[Graph],
    universe: str = "custom",
    n: int | None = None,
    workers: int = 1,
    chunk_size: int = 256,
    max_pq: int = 5,
) -> SuiteReport:
    """Run the selected theorems over every graph in ``stream``.

    Work is split into fixed-size chunks; with ``workers > 1`` chunks run in
    separate processes. Results are merged in chunk order, so the report does
    not depend on the worker count.
    """
    ids = tuple(theorem_ids)
    unknown = set(ids) - set(THEOREM_IDS)
    if unknown:
        raise ValueError(f"unknown theorem ids: {sorted(unknown)}")
    graphs = list(stream)
    chunks = [(ids, graphs[i:i + chunk_size], max_pq) for i in range(0, len(graphs), chunk_size)]
    report = SuiteReport(universe, n, graphs=len(graphs))
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, chunks))
    else:
        results = [_run_chunk(c) for c in chunks]
    rows = []
    for verdicts, tree_rows in results:
        for v in verdicts:
            report.add(v)
        rows.extend(tree_rows)
    if "T3cat" in ids:
        report.caterpillar_minima = _caterpillar_minima(rows)
        for cm in report.caterpillar_minima:
            report.add(cm.verdict)
    return report


def theorem_selection(spec: str) -> tuple[str, ...]:
    if spec == "all":
        return THEOREM_IDS
    return tuple(itertools.chain.from_iterable(s.split(",") for s in spec.split()))
