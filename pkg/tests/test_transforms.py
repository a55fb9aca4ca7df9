import pytest

from eccindex.canon import is_isomorphic
from eccindex.enumeration import all_trees
from eccindex.families import caterpillar, complete, cycle, path, star
from eccindex.graph import GraphError, NotATree, build_graph, distance_profile, is_caterpillar
from eccindex.transforms import (
    iterate_to_caterpillar,
    iterate_to_star,
    leaf_shift_candidates,
    merge_paths_delta,
    shift_leaves_toward_spine,
    star_ward_bound,
    star_ward_candidates,
    star_ward_shift,
)

from test_invariants import nx_indices

SPIDER = build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def test_spider_leaf_shift():
    assert (1, 0) in leaf_shift_candidates(SPIDER)
    t2, tr = shift_leaves_toward_spine(SPIDER, 1, 0)
    assert sorted(t2.adjacency[0]) == [1, 2, 3, 5]
    assert tr.delta_difference > 0
    assert is_caterpillar(t2)
    # independent recount of both trees
    before, after = nx_indices(SPIDER), nx_indices(t2)
    assert tr.delta_xi_d == before["xi_d"] - after["xi_d"]
    assert tr.delta_xi_c == before["xi_c"] - after["xi_c"]
    assert tr.moved_set_size == 1


def test_leaf_shift_rejects_p4_and_bad_input():
    p4 = path(4)
    assert leaf_shift_candidates(p4) == []
    with pytest.raises(GraphError):
        shift_leaves_toward_spine(p4, 1, 2)
    with pytest.raises(GraphError):
        shift_leaves_toward_spine(p4, 1, 0)
    with pytest.raises(GraphError):
        shift_leaves_toward_spine(p4, 0, 2)
    with pytest.raises(NotATree):
        shift_leaves_toward_spine(cycle(5), 0, 1)


def test_broom_has_no_leaf_shift():
    # path of three with two extra leaves at one end: already a caterpillar
    broom = caterpillar(3, [0, 0, 2])
    assert is_caterpillar(broom)
    assert leaf_shift_candidates(broom) == []


def test_star_ward_p5():
    p5 = path(5)
    assert distance_profile(p5).ecc[1] == 3
    t2, tr = star_ward_shift(p5, 1, 2)
    assert tr.delta_difference > 0
    assert tr.delta_difference >= star_ward_bound(5, tr.moved_set_size)
    assert distance_profile(t2).diam == 3


def test_star_ward_rejects():
    with pytest.raises(GraphError):
        star_ward_shift(star(6), 0, 1)
    with pytest.raises(GraphError):
        star_ward_shift(path(5), 2, 1)
    with pytest.raises(GraphError):
        star_ward_shift(path(5), 0, 2)
    assert star_ward_candidates(star(6)) == []


def test_star_ward_double_star():
    # diameter 3: the two centres stand in for the (d-1, d-2) pair
    ds = caterpillar(2, [2, 2])
    assert star_ward_candidates(ds) == [(0, 1), (1, 0)]
    t2, tr = star_ward_shift(ds, 0, 1)
    assert is_isomorphic(t2, star(6))
    assert tr.delta_difference >= star_ward_bound(6, 3)


@pytest.mark.parametrize("n", range(2, 11))
def test_iterate_to_star(n):
    for t in all_trees(n):
        final, traces = iterate_to_star(t)
        assert len(traces) <= n
        assert is_isomorphic(final, star(n))
        assert all(tr.delta_difference > 0 for tr in traces)


@pytest.mark.parametrize("n", range(7, 11))
def test_iterate_to_caterpillar_keeps_order_and_diameter(n):
    for t in all_trees(n):
        d = distance_profile(t).diam
        final, traces = iterate_to_caterpillar(t)
        assert is_caterpillar(final)
        assert distance_profile(final).diam == d
        assert all(tr.delta_difference > 0 for tr in traces)


def test_merge_paths_k2():
    # G(1,1) at an end of K2 is S4, G(2,0) is P4.
    tr = merge_paths_delta(complete(2), 0, 1, 1)
    s4, p4 = nx_indices(star(4)), nx_indices(path(4))
    assert tr.gain_xi_d == p4["xi_d"] - s4["xi_d"] == 19
    assert tr.gain_xi_c == p4["xi_c"] - s4["xi_c"] == 5
    assert tr.illic_rhs_times6 == 55
    assert tr.illic_holds
    # q(3p + 2m(G) - 1) = 4 with m(K2) = 1: the stated xi_c bound is exceeded here.
    assert tr.xic_bound == 4
    assert not tr.xic_holds


def test_merge_paths_p3_end():
    tr = merge_paths_delta(path(3), 0, 2, 1)
    g21 = build_graph(6, [(2, 1), (1, 0), (0, 3), (3, 4), (0, 5)])
    a, b = nx_indices(g21), nx_indices(path(6))
    assert (tr.gain_xi_d, tr.gain_xi_c) == (b["xi_d"] - a["xi_d"], b["xi_c"] - a["xi_c"])
    assert tr.gain_xi_d == 87 and tr.illic_rhs_times6 == 278
    assert tr.gain_xi_c == 9 and tr.xic_bound == 9
    assert tr.illic_holds and tr.xic_holds


def test_merge_paths_preconditions():
    with pytest.raises(GraphError):
        merge_paths_delta(path(3), 0, 3, 1)
    with pytest.raises(GraphError):
        merge_paths_delta(path(3), 0, 1, 0)
    with pytest.raises(GraphError):
        merge_paths_delta(path(3), 5, 1, 1)


def test_trace_dict_roundtrip():
    _, tr = star_ward_shift(path(5), 1, 2)
    d = tr.to_dict()
    assert d["delta_xi_d"] == d["before"]["xi_d"] - d["after"]["xi_d"]
