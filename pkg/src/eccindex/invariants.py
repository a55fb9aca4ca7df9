"""Eccentricity-based topological indices.

Every index is an exact integer. The eccentric connectivity index and the
eccentric distance sum each have a second, edge- or pair-based formula; those
are evaluated alongside the vertex sums when ``cross_check`` is on (the
default unless Python runs with ``-O``).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

from .graph import DistanceProfile, Graph, distance_profile

INT64_MAX = 2**63 - 1

REPORT_FIELDS = (
    "n", "m", "xi_c", "xi_d", "wiener", "zagreb1", "degree_distance",
    "ecc_total", "diam", "rad", "max_deg",
)


def eccentric_connectivity(p: DistanceProfile) -> int:
    return sum(e * d for e, d in zip(p.ecc, p.deg))


def eccentric_connectivity_edges(p: DistanceProfile) -> int:
    ecc = p.ecc
    return sum(ecc[u] + ecc[v] for u, v in p.graph.edges())


def eccentric_distance_sum(p: DistanceProfile) -> int:
    return sum(e * D for e, D in zip(p.ecc, p.totdist))


def eccentric_distance_sum_pairs(p: DistanceProfile) -> int:
    ecc, dist = p.ecc, p.dist
    total = 0
    for u in range(p.n):
        row = dist[u]
        for v in range(u + 1, p.n):
            total += (ecc[u] + ecc[v]) * row[v]
    return total


def wiener(p: DistanceProfile) -> int:
    return sum(p.totdist) // 2


def zagreb1(p: DistanceProfile) -> int:
    return sum(d * d for d in p.deg)


def degree_distance(p: DistanceProfile) -> int:
    return sum(d * D for d, D in zip(p.deg, p.totdist))


def eccentricity_total(p: DistanceProfile) -> int:
    return sum(p.ecc)


@dataclass(frozen=True)
class IndexReport:
    n: int
    m: int
    xi_c: int
    xi_d: int
    wiener: int
    zagreb1: int
    degree_distance: int
    ecc_total: int
    diam: int
    rad: int
    max_deg: int

    @property
    def difference(self) -> int:
        """xi_d - xi_c, the quantity most bounds in this package are about."""
        return self.xi_d - self.xi_c

    def to_dict(self) -> dict[str, int]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def csv_row(self) -> str:
        return ",".join(str(getattr(self, f)) for f in REPORT_FIELDS)

    @staticmethod
    def csv_header() -> str:
        return ",".join(REPORT_FIELDS)


assert tuple(f.name for f in fields(IndexReport)) == REPORT_FIELDS


def report_from_profile(p: DistanceProfile, cross_check: bool | None = None) -> IndexReport:
    if cross_check is None:
        cross_check = __debug__
    rep = IndexReport(
        n=p.n,
        m=p.graph.m,
        xi_c=eccentric_connectivity(p),
        xi_d=eccentric_distance_sum(p),
        wiener=wiener(p),
        zagreb1=zagreb1(p),
        degree_distance=degree_distance(p),
        ecc_total=eccentricity_total(p),
        diam=p.diam,
        rad=p.rad,
        max_deg=max(p.deg),
    )
    if cross_check:
        if rep.xi_c != eccentric_connectivity_edges(p):
            raise AssertionError(f"edge-sum xi_c disagrees for {p.graph!r}")
        if rep.xi_d != eccentric_distance_sum_pairs(p):
            raise AssertionError(f"pair-sum xi_d disagrees for {p.graph!r}")
        if sum(p.deg) != 2 * p.graph.m or sum(p.totdist) % 2:
            raise AssertionError(f"handshake/Wiener parity broken for {p.graph!r}")
        if max(rep.xi_d, rep.degree_distance) > INT64_MAX:
            raise OverflowError("index exceeds the signed 64-bit range")
    return rep


def index_report(g: Graph, cross_check: bool | None = None) -> IndexReport:
    """Compute one distance profile and every scalar index from it."""
    return report_from_profile(distance_profile(g), cross_check)
