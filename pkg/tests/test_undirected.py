import random

from hypothesis import given, settings
from hypothesis import strategies as st

from graphs import random_connected, u1
from stpaths import (
    BoundedPathQuery,
    Graph,
    brute_force_paths,
    list_bounded_directed,
    list_bounded_undirected,
)


def run(g, s, t, alpha):
    out = []
    stats = list_bounded_undirected(BoundedPathQuery(g, s, t, alpha), out.append)
    return out, stats


def test_u1_single_path_no_recursion():
    paths, stats = run(u1(), 0, 3, 3)
    assert [(p.vertices, p.weight) for p in paths] == [((0, 1, 2, 3), 3)]
    assert stats.internal_nodes == 0
    assert stats.sssp_total == 2


def test_u1_branches_at_vertex_2():
    paths, stats = run(u1(), 0, 3, 11)
    assert sorted((p.vertices, p.weight) for p in paths) == [((0, 1, 2, 3), 3), ((0, 1, 3), 11)]
    assert stats.internal_nodes == 1
    assert stats.container_peak == 2
    assert stats.single_child_nodes == 0


def test_unit_four_cycle():
    g = Graph.from_arcs(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], directed=False)
    paths, _ = run(g, 0, 2, 2)
    assert sorted(p.vertices for p in paths) == [(0, 1, 2), (0, 3, 2)]


def test_empty_root_yields_nothing():
    paths, stats = run(u1(), 0, 3, 2)
    assert paths == []
    assert stats.paths_emitted == 0


def test_source_equals_target():
    paths, stats = run(u1(), 1, 1, 0)
    assert [p.vertices for p in paths] == [(1,)]
    assert stats.sssp_total == 0


def test_graph_restored():
    g = u1()
    before = g.arc_set()
    run(g, 0, 3, 11)
    assert g.arc_set() == before and g.pending_undo == 0


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_same_set_as_directed_on_bidirected(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    g = random_connected(rng, n, 0.35, 1, 5)
    s, t = rng.sample(range(n), 2)
    weights = sorted({p.weight for p in brute_force_paths(g, s, t)})
    alpha = rng.choice(weights)
    paths, stats = run(g, s, t, alpha)
    dpaths = []
    list_bounded_directed(BoundedPathQuery(g.bidirected(), s, t, alpha), dpaths.append)
    assert sorted(p.vertices for p in paths) == sorted(p.vertices for p in dpaths)
    assert sorted(p.vertices for p in paths) == [p.vertices for p in brute_force_paths(g, s, t, alpha)]
    assert stats.single_child_nodes == 0
    assert stats.internal_nodes <= stats.leaves
    assert stats.sssp_total <= 3 * (stats.internal_nodes + stats.leaves) <= 6 * len(paths)
