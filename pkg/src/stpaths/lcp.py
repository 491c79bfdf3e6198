"""Longest common prefix of the bounded st-paths of an undirected graph.

Walk the s-t path of a shortest-path tree rooted at ``s``. At tree vertex
``v_i`` the prefix can be extended by the tree edge ``(v_i, v_{i+1})``
unless some non-tree edge ``(x, z)`` enters the subtree of ``v_{i+1}``
from ``v_i`` itself or from the subtree of a sibling of ``v_{i+1}`` with
``d(s, x) + w(x, z) + d(z, t) <= alpha``. Removing the tree edge does not
change either distance for such edges in an undirected graph, so two
searches (from ``s`` and from ``t``) answer every test.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Graph, GraphError, Path
from .shortest import _euler_intervals, distances
from .stats import EmptyPathSet


def _lcp(g: Graph, s: int, t: int, budget, trace: dict | None = None):
    """Scaled-weight core; returns ``(vertices, scaled weight)``."""
    if s == t:
        if budget < 0:
            raise EmptyPathSet(f"no path of length within budget from {s} to {t}")
        return [s], 0
    ds, par, order = distances(g, s, bound=budget)
    dt, _, _ = distances(g, t, reverse=True, bound=budget)
    if trace is not None:
        trace["sssp"] = trace.get("sssp", 0) + 2
    if t not in ds:
        raise EmptyPathSet(f"no path of length within budget from {s} to {t}")

    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in order:
        if par[v] >= 0:
            children[par[v]].append(v)
    enter, exit_ = _euler_intervals(g.n, s, children)
    # vertices by Euler entry time, so a subtree is a contiguous slice
    by_enter = [0] * len(order)
    for v in order:
        by_enter[enter[v]] = v

    tree_path = [t]
    while tree_path[-1] != s:
        tree_path.append(par[tree_path[-1]])
    tree_path.reverse()

    out, head, iw, alive = g._out, g._head, g._iw, g._alive
    scanned = 0
    for i in range(len(tree_path) - 1):
        vi, nxt = tree_path[i], tree_path[i + 1]
        lo, hi = enter[nxt], exit_[nxt]
        sources = [vi]
        for w in children[vi]:
            if w != nxt:
                sources.extend(by_enter[enter[w]:exit_[w]])
        for x in sources:
            dx = ds[x]
            for a in out[x]:
                if not alive[a]:
                    continue
                scanned += 1
                z = head[a]
                if x == vi and z == nxt:
                    continue
                ez = enter[z]
                if ez < 0 or not (lo <= ez < hi):
                    continue
                dz = dt.get(z)
                if dz is not None and dx + iw[a] + dz <= budget:
                    if trace is not None:
                        trace["scanned"] = scanned
                        trace["deviation"] = (x, z, i)
                    prefix = tree_path[: i + 1]
                    return prefix, ds[vi]
    if trace is not None:
        trace["scanned"] = scanned
        trace["deviation"] = None
    return tree_path, ds[t]


def longest_common_prefix(g: Graph, s: int, t: int, alpha, trace: dict | None = None) -> Path:
    """Longest path that starts every simple ``s -> t`` path of weight ``<= alpha``.

    ``g`` must be undirected with non-negative weights. Raises
    :class:`EmptyPathSet` when ``d(s, t) > alpha``. If ``trace`` is a dict
    it receives ``sssp`` (searches run), ``scanned`` (arc endpoints looked
    at) and ``deviation`` (``(x, z, i)`` for the edge that stopped the walk
    at tree position ``i``, or ``None``).
    """
    if g.directed:
        raise GraphError("longest_common_prefix needs an undirected graph")
    for v in (s, t):
        if not g.is_alive(v):
            raise GraphError(f"vertex {v} is not alive")
    budget = g.scale_budget(alpha)
    vertices, w = _lcp(g, s, t, budget, trace)
    return Path(tuple(vertices), Fraction(w, g.scale))
