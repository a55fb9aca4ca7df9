"""Command-line front end: ``eccindex {compute,family,transform,enumerate,verify}``."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from contextlib import nullcontext
from dataclasses import dataclass, field

from . import families, transforms, verify
from .enumeration import MAX_GRAPH_ORDER, MAX_TREE_ORDER, EnumerationStream, default_workers, where
from .formats import emit_edge_list, emit_graph6, parse_graph6, read_graphs, write_graphs
from .graph import GraphError
from .invariants import IndexReport, index_report


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    output: str | None = None
    format: str = "graph6"
    universe: str | None = None
    n: int | None = None
    diameter: int | None = None
    theorems: tuple[str, ...] = ()
    workers: int = 1
    extra: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.universe == "trees" and self.n is not None and not 1 <= self.n <= MAX_TREE_ORDER:
            raise GraphError(f"trees are capped at n <= {MAX_TREE_ORDER}")
        if self.universe == "graphs" and self.n is not None and not 1 <= self.n <= MAX_GRAPH_ORDER:
            raise GraphError(f"graphs are capped at n <= {MAX_GRAPH_ORDER}")


def _open_in(path: str | None):
    if path in (None, "-"):
        return nullcontext(sys.stdin)
    return open(path)


def _open_out(path: str | None):
    if path in (None, "-"):
        return nullcontext(sys.stdout)
    return open(path, "w")


def _load_graph(spec: str):
    if os.path.exists(spec):
        with open(spec) as fh:
            return next(read_graphs(fh))
    return parse_graph6(spec)


def cmd_compute(cfg: RunConfig) -> int:
    with _open_in(cfg.input) as fh, _open_out(cfg.output) as out:
        graphs = read_graphs(fh, cfg.extra.get("input_format", "auto"))
        if cfg.format == "json":
            for g in graphs:
                out.write(index_report(g).to_json() + "\n")
        else:
            out.write(IndexReport.csv_header() + "\n")
            for g in graphs:
                out.write(index_report(g).csv_row() + "\n")
    return 0


def cmd_family(cfg: RunConfig) -> int:
    g = families.FamilySpec(cfg.extra["kind"], tuple(cfg.extra["params"])).build()
    with _open_out(cfg.output) as out:
        out.write(emit_edge_list(g) if cfg.format == "edgelist" else emit_graph6(g) + "\n")
    return 0


def cmd_transform(cfg: RunConfig) -> int:
    g = _load_graph(cfg.input)
    name, args = cfg.extra["name"], cfg.extra["args"]
    if name == "shift-leaves":
        g2, trace = transforms.shift_leaves_toward_spine(g, *args)
    elif name == "star-ward":
        g2, trace = transforms.star_ward_shift(g, *args)
    elif name == "merge-paths":
        trace = transforms.merge_paths_delta(g, *args)
        g2 = None
    else:
        raise ValueError(f"unknown transform {name!r}")
    out = trace.to_dict()
    if g2 is not None:
        out["result"] = emit_graph6(g2)
    with _open_out(cfg.output) as fh:
        fh.write(json.dumps(out, indent=2) + "\n")
    return 0


def _stream(cfg: RunConfig) -> EnumerationStream:
    pred = where(diam=cfg.diameter) if cfg.diameter is not None else None
    return EnumerationStream(cfg.universe, cfg.n, pred)


def cmd_enumerate(cfg: RunConfig) -> int:
    with _open_out(cfg.output) as out:
        write_graphs(_stream(cfg), out, cfg.format)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    stream = _stream(cfg)
    report = verify.run_suite(
        cfg.theorems, stream, universe=cfg.universe, n=cfg.n,
        workers=cfg.workers, max_pq=cfg.extra.get("max_pq", 5),
    )
    sys.stdout.write(report.to_json() + "\n")
    csv_path = cfg.extra.get("csv")
    if csv_path:
        _write_verdict_csv(cfg, csv_path)
    return 0 if report.ok else 1


def _write_verdict_csv(cfg: RunConfig, path: str) -> None:
    cols = ["theorem_id", "graph_id", "lhs", "rhs", "slack", "equality",
            "characterization_expected", "characterization_ok"]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(cols)
        for g in _stream(cfg):
            for tid in cfg.theorems:
                if tid in verify.GRAPH_THEOREMS:
                    v = verify.check(tid, g)
                    if v.applicable:
                        d = v.to_dict()
                        w.writerow([d[c] for c in cols])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eccindex", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="index report for each input graph")
    c.add_argument("--input", default="-")
    c.add_argument("--input-format", default="auto", choices=["auto", "graph6", "edgelist"])
    c.add_argument("--format", default="csv", choices=["csv", "json"])
    c.add_argument("--output")

    f = sub.add_parser("family", help="emit a named family member")
    f.add_argument("kind", choices=families.FAMILY_KINDS)
    f.add_argument("--params", type=int, nargs="+", required=True)
    f.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    f.add_argument("--output")

    t = sub.add_parser("transform", help="apply a tree rewrite and print its trace")
    t.add_argument("name", choices=["shift-leaves", "star-ward", "merge-paths"])
    t.add_argument("--input", required=True, help="graph6 string or file")
    t.add_argument("--args", type=int, nargs="+", required=True)
    t.add_argument("--output")

    e = sub.add_parser("enumerate", help="write every tree or connected graph of order n")
    e.add_argument("universe", choices=["trees", "graphs"])
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--diameter", type=int)
    e.add_argument("--format", default="graph6", choices=["graph6", "edgelist"])
    e.add_argument("--out", dest="output")

    v = sub.add_parser("verify", help="check theorems over an enumerated universe")
    v.add_argument("--theorem", default="all", help="theorem id, comma list, or 'all'")
    v.add_argument("--universe", required=True, choices=["trees", "graphs"])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--diameter", type=int)
    v.add_argument("--max-pq", type=int, default=5, help="largest p+q for the lemma checks")
    v.add_argument("--csv", help="also write per-graph verdicts here")
    v.add_argument("--workers", type=int, default=default_workers())
    return ap


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    extra: dict = {}
    kw: dict = {"command": ns.command, "output": getattr(ns, "output", None)}
    if ns.command == "compute":
        kw.update(input=ns.input, format=ns.format)
        extra["input_format"] = ns.input_format
    elif ns.command == "family":
        kw.update(format=ns.format)
        extra.update(kind=ns.kind, params=ns.params)
    elif ns.command == "transform":
        kw.update(input=ns.input)
        extra.update(name=ns.name, args=ns.args)
    elif ns.command == "enumerate":
        kw.update(universe=ns.universe, n=ns.n, diameter=ns.diameter, format=ns.format)
    elif ns.command == "verify":
        kw.update(universe=ns.universe, n=ns.n, diameter=ns.diameter,
                  theorems=verify.theorem_selection(ns.theorem), workers=ns.workers)
        extra.update(max_pq=ns.max_pq, csv=ns.csv)
    return RunConfig(extra=extra, **kw)


COMMANDS = {
    "compute": cmd_compute,
    "family": cmd_family,
    "transform": cmd_transform,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except (GraphError, ValueError, OSError) as exc:
        print(f"eccindex: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
