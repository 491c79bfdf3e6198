import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphs import d1, random_connected, random_digraph, u1
from stpaths import (
    INF,
    Graph,
    GraphError,
    NegativeCycle,
    NegativeWeightError,
    brute_force_paths,
    johnson_reweight,
    sssp,
    subtree_contains,
)


def brute_distance(g, s, t):
    """Minimum over every simple s-t path, or INF."""
    paths = brute_force_paths(g, s, t)
    return min((p.weight for p in paths), default=INF)


def test_d1_reverse_distances():
    tree = sssp(d1(), 3, "reverse")
    assert tree.dist == [2, 1, 2, 0]


def test_single_vertex():
    tree = sssp(Graph(1), 0)
    assert tree.dist == [0]
    assert tree.parent == [-1]


def test_unit_cycle_bfs():
    g = Graph.from_arcs(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    assert g.unit_weights
    assert sssp(g, 0).dist == [0, 1, 2, 3]


def test_unreachable_sentinel():
    g = Graph.from_arcs(3, [(0, 1, 2)])
    tree = sssp(g, 0)
    assert tree.dist[2] == INF
    assert tree.dist[2] > Fraction(10**9)
    assert not tree.reachable(2)
    with pytest.raises(GraphError):
        subtree_contains(tree, 0, 2)


def test_negative_arc_is_contract_violation():
    g = Graph.from_arcs(2, [(0, 1, -1)])
    with pytest.raises(NegativeWeightError):
        sssp(g, 0)


def test_subtree_u1():
    tree = sssp(u1(), 0)
    assert tree.path(3) == [0, 1, 2, 3]
    assert subtree_contains(tree, 2, 3)
    assert not subtree_contains(tree, 3, 2)
    for z in range(4):
        assert subtree_contains(tree, 0, z)
        assert subtree_contains(tree, z, z)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.booleans(), st.booleans())
def test_distances_match_exhaustive_oracle(seed, directed, unit):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    wmax = 1 if unit else 6
    g = random_digraph(rng, n, 0.35, 0 if not unit else 1, wmax) if directed else random_connected(rng, n, 0.3, 1, wmax)
    root = rng.randrange(n)
    for direction in ("forward", "reverse"):
        tree = sssp(g, root, direction)
        for v in range(n):
            expect = brute_distance(g, root, v) if direction == "forward" else brute_distance(g, v, root)
            assert tree.dist[v] == expect
        # relaxation optimality
        arcs = list(g.arcs())
        if not g.directed:
            arcs += [(v, u, w) for u, v, w in arcs]
        for u, v, w in arcs:
            a, b = (u, v) if direction == "forward" else (v, u)
            if tree.dist[a] != INF:
                assert tree.dist[b] <= tree.dist[a] + w
        for v in range(n):
            p = tree.parent[v]
            if p >= 0:
                w = g.weight(p, v) if direction == "forward" else g.weight(v, p)
                assert tree.dist[v] == tree.dist[p] + w


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_euler_intervals_laminar_and_exact(seed):
    rng = random.Random(seed)
    g = random_connected(rng, rng.randint(2, 12), 0.2)
    tree = sssp(g, 0)

    def ancestors(z):
        out = {z}
        while tree.parent[z] >= 0:
            z = tree.parent[z]
            out.add(z)
        return out

    for v in range(g.n):
        for z in range(g.n):
            assert subtree_contains(tree, v, z) == (v in ancestors(z))
            iv = (tree.enter[v], tree.exit[v])
            iz = (tree.enter[z], tree.exit[z])
            nested = iv[0] <= iz[0] and iz[1] <= iv[1] or iz[0] <= iv[0] and iv[1] <= iz[1]
            disjoint = iv[1] <= iz[0] or iz[1] <= iv[0]
            assert nested or disjoint


def test_reweight_non_negative_is_identity():
    g = d1()
    r = johnson_reweight(g, 0, 3)
    assert r.potential == [0, 0, 0, 0]
    assert r.constant == 0
    assert r.graph.arc_set() == g.arc_set()


def test_reweight_example():
    g = Graph.from_arcs(3, [(0, 1, -1), (1, 2, 2), (0, 2, 2)])
    r = johnson_reweight(g, 0, 2)
    rg = r.graph
    assert (rg.weight(0, 1), rg.weight(1, 2), rg.weight(0, 2)) == (0, 0, 1)
    assert r.constant == -1
    for path, w in (((0, 1, 2), 1), ((0, 2), 2)):
        wp = sum(rg.weight(a, b) for a, b in zip(path, path[1:]))
        assert wp == w + r.constant
    assert r.budget(Fraction(1)) == 0
    assert r.original_weight(Fraction(0)) == 1


def test_negative_two_cycle():
    g = Graph.from_arcs(2, [(0, 1, 1), (1, 0, -2)])
    with pytest.raises(NegativeCycle) as e:
        johnson_reweight(g, 0, 1)
    assert e.value.vertex in (0, 1)
    assert sorted(e.value.cycle) == [0, 1]


def test_negative_undirected_edge_is_a_cycle():
    g = Graph.from_arcs(2, [(0, 1, -1)], directed=False)
    with pytest.raises(NegativeCycle):
        johnson_reweight(g, 0, 1)


def negative_graph(rng, n):
    """Random digraph with negative arcs but no negative cycle (shifted by potentials)."""
    base = random_digraph(rng, n, 0.4, 0, 5)
    pot = [rng.randint(-6, 6) for _ in range(n)]
    return Graph.from_arcs(n, [(u, v, w + pot[v] - pot[u]) for u, v, w in base.arcs()])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_reweight_preserves_order(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    g = negative_graph(rng, n)
    s, t = rng.sample(range(n), 2)
    r = johnson_reweight(g, s, t)
    assert all(w >= 0 for _, _, w in r.graph.arcs())
    paths = brute_force_paths(g, s, t)
    rw = {p.vertices: p.weight for p in brute_force_paths(r.graph, s, t)}
    for p in paths:
        assert rw[p.vertices] == p.weight + r.constant
    if paths:
        best = min(p.weight for p in paths)
        best_r = min(rw.values())
        assert {p.vertices for p in paths if p.weight == best} == {v for v, w in rw.items() if w == best_r}
