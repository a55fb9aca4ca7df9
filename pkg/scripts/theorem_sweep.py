"""Tally every theorem over the exhaustive graph and tree universes.

    python scripts/theorem_sweep.py --max-graph-n 7 --max-tree-n 10 --workers 4
"""

import argparse
import time

from eccindex.enumeration import all_connected_graphs, all_trees
from eccindex.verify import GRAPH_THEOREMS, LEMMA_THEOREMS, run_suite

COLS = ("checked", "equalities", "violations", "mismatches", "not_applicable")


def _table(title, report):
    print(f"\n{title}  ({report.graphs} graphs)")
    print(f"{'theorem':<14}" + "".join(f"{c:>15}" for c in COLS))
    for tid, t in sorted(report.tallies.items()):
        print(f"{tid:<14}" + "".join(f"{getattr(t, c):>15}" for c in COLS))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-graph-n", type=int, default=7)
    ap.add_argument("--max-tree-n", type=int, default=10)
    ap.add_argument("--lemma-max-n", type=int, default=6)
    ap.add_argument("--max-pq", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    graphs = [g for n in range(2, args.max_graph_n + 1) for g in all_connected_graphs(n)]
    _table("connected graphs", run_suite(GRAPH_THEOREMS, graphs, "graphs", workers=args.workers))

    trees = [t for n in range(2, args.max_tree_n + 1) for t in all_trees(n)]
    _table("trees", run_suite(("T3star", "T3path", "T3cat"), trees, "trees", workers=args.workers))

    bases = [g for n in range(1, args.lemma_max_n + 1) for g in all_connected_graphs(n)]
    _table("pendant-path merges",
           run_suite(LEMMA_THEOREMS, bases, "graphs", workers=args.workers, max_pq=args.max_pq))
    print(f"\ntotal {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
