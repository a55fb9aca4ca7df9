"""List the graphs where a stated bound or equality characterization fails.

Two groups are reported:

* xi_d + xi_c bounds: graphs attaining a bound without being self-centered
  (or the reverse), with the exact pair condition that does decide equality.
* pendant-path merges: instances where the increase of xi_d falls short of its
  lower bound, or the increase of xi_c exceeds q(3p + 2m - 1). The last
  column re-evaluates the xi_c bound with m taken from G(p, q) instead of G.
"""

import argparse

from eccindex.enumeration import all_connected_graphs
from eccindex.families import pendant_paths
from eccindex.formats import emit_graph6
from eccindex.graph import distance_profile
from eccindex.transforms import merge_paths_delta
from eccindex.verify import check_T4sum, lemma_instances, sum_bound_equality_exact


def sum_bound_rows(max_n):
    for n in range(2, max_n + 1):
        for g in all_connected_graphs(n):
            p = distance_profile(g)
            sc = p.rad == p.diam
            for v, side in zip(check_T4sum(g), ("lower", "upper")):
                if v.equality != sc:
                    yield (emit_graph6(g), n, side, v.lhs, v.rhs, p.rad, p.diam,
                           sum_bound_equality_exact(p, side))


def lemma_rows(max_n, max_pq):
    for n in range(1, max_n + 1):
        for g in all_connected_graphs(n):
            for w, p, q in lemma_instances(g, max_pq):
                tr = merge_paths_delta(g, w, p, q)
                if tr.illic_holds and tr.xic_holds:
                    continue
                m_split = pendant_paths(g, w, p, q).graph.m
                yield (emit_graph6(g), w, p, q, 6 * tr.gain_xi_d, tr.illic_rhs_times6,
                       tr.gain_xi_c, tr.xic_bound, q * (3 * p + 2 * m_split - 1))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-pq", type=int, default=5)
    ap.add_argument("--limit", type=int, default=25, help="rows shown per group (0 = all)")
    args = ap.parse_args()

    rows = list(sum_bound_rows(args.max_n))
    print(f"xi_d + xi_c bounds: {len(rows)} equality/self-centered disagreements")
    print("graph6  n  side   lhs  rhs  rad  diam  exact-condition")
    for r in rows[:args.limit or None]:
        print("{:<7} {:>2}  {:<5} {:>4} {:>4} {:>4} {:>5}  {}".format(*r))
    assert all(r[3] == r[4] and r[7] or r[3] != r[4] and not r[7] for r in rows)

    rows = list(lemma_rows(args.max_n, args.max_pq))
    print(f"\npendant-path merges: {len(rows)} instances with a failed bound")
    print("graph6   w  p  q  6*gain_d  6*rhs_d  gain_c  bound_c  bound_c(m of G(p,q))")
    for r in rows[:args.limit or None]:
        print("{:<8} {:>2} {:>2} {:>2}  {:>8} {:>8}  {:>6}  {:>7}  {:>7}".format(*r))


if __name__ == "__main__":
    main()
