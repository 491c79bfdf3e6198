"""Polynomial-delay listing of bounded-length simple st-paths.

The solution set is split by the first arc out of the current endpoint
``u``; a branch ``(u, v)`` is entered only if some path from ``v`` to ``t``
avoiding ``u`` fits in what is left of the budget. One reverse shortest
path search from ``t`` per call answers that test for every out-neighbour,
so each call on the way to the next output costs one search.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .graph import Path
from .shortest import distances
from .stats import BoundedPathQuery, EnumStats, require_non_negative

Emit = Callable[[Path], object]


def list_bounded_directed(q: BoundedPathQuery, emit: Emit) -> EnumStats:
    """Emit every simple ``q.source -> q.target`` path of weight ``<= q.alpha``.

    Paths come out in depth-first order, children visited in adjacency
    order. The recursion runs on an explicit stack and the graph is restored
    on return, also when ``emit`` raises.
    """
    g, s, t = q.graph, q.source, q.target
    require_non_negative(g)
    budget0 = g.scale_budget(q.alpha)
    stats = EnumStats()
    scale = g.scale

    if s == t:
        if budget0 >= 0:
            emit(Path((s,), Fraction(0)))
            stats.count_emit()
        return stats.finish()

    out, head, iw, alive = g._out, g._head, g._iw, g._alive
    path = [s]
    plen = [0]  # scaled prefix weight at each path position
    # frame: [u, budget, feasible children, next index, undo token, emitted at entry]
    frames: list[list] = []
    pending = 0

    def enter(u, budget):
        nonlocal pending
        cand = [(head[a], iw[a]) for a in out[u] if alive[a]]
        token = g.remove_vertex(u)
        dist, _, _ = distances(g, t, reverse=True, bound=budget, targets=[v for v, _ in cand])
        stats.count_sssp()
        stats.internal_nodes += 1
        kids = []
        for v, w in cand:
            d = dist.get(v)
            if d is not None and d <= budget - w:
                kids.append((v, w))
        frames.append([u, budget, kids, 0, token, stats.paths_emitted])
        pending += len(kids)
        if pending > stats.container_peak:
            stats.container_peak = pending

    try:
        enter(s, budget0)
        while frames:
            fr = frames[-1]
            kids = fr[2]
            if fr[3] < len(kids):
                v, w = kids[fr[3]]
                fr[3] += 1
                pending -= 1
                path.append(v)
                plen.append(plen[-1] + w)
                if v == t:
                    emit(Path(tuple(path), Fraction(plen[-1], scale)))
                    stats.count_emit()
                    path.pop()
                    plen.pop()
                else:
                    enter(v, fr[1] - w)
                continue
            frames.pop()
            g.restore(fr[4])
            if fr[5] == stats.paths_emitted and frames:
                stats.dead_calls += 1
            path.pop()
            plen.pop()
    finally:
        while frames:
            g.restore(frames.pop()[4])
    return stats.finish()
