import io
import json
import subprocess
import sys

import networkx as nx
import pytest

from eccindex.canon import is_isomorphic
from eccindex.cli import main
from eccindex.enumeration import all_connected_graphs, all_trees
from eccindex.families import complete, path, star
from eccindex.formats import (
    MalformedEncoding,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graphs,
    write_graphs,
)
from eccindex.graph import Disconnected, GraphError, build_graph

from conftest import from_nx, to_nx


def test_graph6_known_strings():
    assert parse_graph6("C~") == complete(4)
    assert parse_graph6(">>graph6<<C~\n") == complete(4)
    assert is_isomorphic(parse_graph6("BW"), path(3))
    assert emit_graph6(build_graph(1, [])) == "@"
    with pytest.raises(Disconnected):
        parse_graph6("A?")


@pytest.mark.parametrize("bad", ["", "C~~", "C", "B@", "~~~~", "C\x7f"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphError):
        parse_graph6(bad)


@pytest.mark.parametrize("n", range(1, 8))
def test_graph6_roundtrip_graphs(n):
    for g in all_connected_graphs(n):
        s = emit_graph6(g)
        assert parse_graph6(s) == g
        # networkx reads the same bytes as the same labelled graph
        assert from_nx(nx.from_graph6_bytes(s.encode())) == g


@pytest.mark.parametrize("n", range(1, 12))
def test_graph6_roundtrip_trees(n):
    for t in all_trees(n):
        assert parse_graph6(emit_graph6(t)) == t


def test_graph6_matches_networkx_writer():
    for g in (path(9), star(13), complete(7)):
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert emit_graph6(g) == ref


def test_edge_list_roundtrip():
    for g in list(all_connected_graphs(5)) + [path(1)]:
        assert parse_edge_list(emit_edge_list(g)) == g
    assert parse_edge_list("# comment\n3 2\n0 1\n\n1 2\n") == path(3)
    for bad in ("", "3\n0 1", "3 2\n0 1\n", "3 1\n0 x\n"):
        with pytest.raises(MalformedEncoding):
            parse_edge_list(bad)


def test_read_write_streams():
    buf = io.StringIO()
    assert write_graphs(all_trees(6), buf) == 6
    back = list(read_graphs(io.StringIO(buf.getvalue())))
    assert back == list(all_trees(6))
    assert list(read_graphs(io.StringIO("3 2\n0 1\n1 2\n"))) == [path(3)]


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_compute_path4(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("Ch\n"))
    code, out, _ = _run(capsys, "compute")
    header, row = out.strip().splitlines()
    rec = dict(zip(header.split(","), map(int, row.split(","))))
    assert code == 0
    assert (rec["xi_c"], rec["xi_d"]) == (14, 52)


def test_cli_compute_json_from_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = _run(capsys, "compute", "--input", str(f), "--format", "json")
    assert code == 0 and json.loads(out)["xi_d"] == 52


def test_cli_family_and_enumerate(capsys, tmp_path):
    code, out, _ = _run(capsys, "family", "Star", "--params", "5")
    assert code == 0 and parse_graph6(out) == star(5)
    code, out, _ = _run(capsys, "enumerate", "trees", "--n", "4")
    assert code == 0 and len(out.split()) == 2
    dest = tmp_path / "g6.txt"
    code, _, _ = _run(capsys, "enumerate", "graphs", "--n", "5", "--out", str(dest))
    assert len(dest.read_text().split()) == 21
    code, out, _ = _run(capsys, "enumerate", "trees", "--n", "6", "--diameter", "3")
    assert len(out.split()) == 2


def test_cli_transform(capsys):
    code, out, _ = _run(capsys, "transform", "star-ward", "--input", emit_graph6(path(5)), "--args", "1", "2")
    d = json.loads(out)
    assert code == 0 and d["delta_xi_d"] - d["delta_xi_c"] > 0
    assert parse_graph6(d["result"]).n == 5
    code, out, _ = _run(capsys, "transform", "merge-paths", "--input", "A_", "--args", "0", "1", "1")
    d = json.loads(out)
    assert (d["gain_xi_d"], d["gain_xi_c"], d["xic_holds"]) == (19, 5, False)


def test_cli_errors(capsys):
    code, _, err = _run(capsys, "enumerate", "graphs", "--n", "9")
    assert code == 2 and "capped" in err
    code, _, err = _run(capsys, "transform", "star-ward", "--input", "A?", "--args", "0", "1")
    assert code == 2 and err.startswith("eccindex: error")


def test_cli_verify_exit_codes(capsys, tmp_path):
    code, out, _ = _run(capsys, "verify", "--theorem", "T2i,T2ii,T4radius", "--universe", "graphs", "--n", "6")
    s = json.loads(out)
    assert code == 0 and s["ok"] and s["graphs"] == 112
    assert s["theorems"]["T2i"]["violations"] == 0
    # the sum-bound characterization and the lemmas have genuine counterexamples
    code, out, _ = _run(capsys, "verify", "--theorem", "all", "--universe", "graphs", "--n", "6")
    s = json.loads(out)
    assert code == 1 and not s["ok"]
    kinds = {f["theorem"] for f in s["first_failures"]}
    assert kinds <= {"L_illic", "L_xic", "T4sum_upper", "T4sum_lower"}
    csv_path = tmp_path / "v.csv"
    code, _, _ = _run(capsys, "verify", "--theorem", "T3star", "--universe", "trees", "--n", "7",
                      "--csv", str(csv_path))
    assert code == 0 and len(csv_path.read_text().splitlines()) == 12


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "eccindex", "family", "Path", "--params", "4"],
                       capture_output=True, text=True, check=True)
    assert parse_graph6(r.stdout) == path(4)
