"""graph6 and edge-list encodings."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError, build_graph


class MalformedEncoding(GraphError):
    pass


def parse_graph6(line: str) -> Graph:
    """Decode a short-form graph6 string (n <= 62) into a connected Graph."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise MalformedEncoding("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedEncoding(f"character outside graph6 range in {s!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise MalformedEncoding("only the short form (n <= 62) is supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedEncoding(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = "".join(format(ord(c) - 63, "06b") for c in body)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    if any(b == "1" for b in bits[nbits:]):
        raise MalformedEncoding("non-zero padding bits")
    return build_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError("graph6 short form supports n <= 62")
    bits = [
        "1" if g.has_edge(i, j) else "0" for j in range(1, g.n) for i in range(j)
    ]
    bits += ["0"] * (-len(bits) % 6)
    body = "".join(chr(int("".join(bits[k:k + 6]), 2) + 63) for k in range(0, len(bits), 6))
    return chr(g.n + 63) + body


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; blank and ``#`` lines are ignored."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise MalformedEncoding("edge list needs a header line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise MalformedEncoding(f"bad edge list: {exc}") from None
    if len(edges) != m:
        raise MalformedEncoding(f"header says {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graphs(fh: TextIO, fmt: str = "auto") -> Iterator[Graph]:
    """Graphs from a stream: one graph6 per line, or a single edge list."""
    text = fh.read()
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        fmt = "edgelist" if len(first.split()) == 2 else "graph6"
    if fmt == "edgelist":
        yield parse_edge_list(text)
        return
    if fmt != "graph6":
        raise ValueError(f"unsupported input format {fmt!r}")
    for ln in text.splitlines():
        if ln.strip():
            yield parse_graph6(ln)


def write_graphs(graphs: Iterable[Graph], fh: TextIO, fmt: str = "graph6") -> int:
    count = 0
    for g in graphs:
        fh.write(emit_graph6(g) + "\n" if fmt == "graph6" else emit_edge_list(g))
        count += 1
    return count
