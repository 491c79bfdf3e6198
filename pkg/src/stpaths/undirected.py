"""Bounded st-path listing for undirected graphs with branching recursion.

Each call first extends the current prefix by the longest common prefix of
its remaining solution set, so every internal node of the recursion has at
least two children and the total work is linear in the number of paths.
"""

from __future__ import annotations

from fractions import Fraction

from .directed import Emit
from .graph import GraphError, Path
from .lcp import _lcp
from .shortest import distances
from .stats import BoundedPathQuery, EmptyPathSet, EnumStats, require_non_negative


def list_bounded_undirected(q: BoundedPathQuery, emit: Emit) -> EnumStats:
    """Emit every simple ``q.source - q.target`` path of weight ``<= q.alpha``."""
    g, s, t = q.graph, q.source, q.target
    if g.directed:
        raise GraphError("list_bounded_undirected needs an undirected graph")
    require_non_negative(g)
    stats = EnumStats()
    scale = g.scale
    budget0 = g.scale_budget(q.alpha)

    if s == t:
        if budget0 >= 0:
            emit(Path((s,), Fraction(0)))
            stats.count_emit()
        return stats.finish()

    out, head, iw, alive = g._out, g._head, g._iw, g._alive
    path: list[int] = []
    # frame: [budget left, prefix weight, children, next index, tokens, path length, emitted at entry]
    frames: list[list] = []
    pending = 0
    trace: dict = {}

    def call(u, budget, pw, root=False):
        """Run one recursion node: emit a leaf or push a branching frame."""
        nonlocal pending
        base = len(path)
        try:
            rho, rw = _lcp(g, u, t, budget, trace)
        except EmptyPathSet:
            if root:
                stats.count_sssp(trace.pop("sssp", 0))
                return
            raise
        stats.count_sssp(trace.pop("sssp", 0))
        path.extend(rho)
        pw += rw
        if rho[-1] == t:
            emit(Path(tuple(path), Fraction(pw, scale)))
            stats.count_emit()
            del path[base:]
            return
        end = rho[-1]
        tokens = [g.remove_vertex(x) for x in rho[:-1]]
        cand = [(head[a], iw[a]) for a in out[end] if alive[a]]
        tokens.append(g.remove_vertex(end))
        left = budget - rw
        dist, _, _ = distances(g, t, reverse=True, bound=left, targets=[v for v, _ in cand])
        stats.count_sssp()
        stats.internal_nodes += 1
        kids = []
        for v, w in cand:
            d = dist.get(v)
            if d is not None and d <= left - w:
                kids.append((v, w))
        if len(kids) < 2:
            stats.single_child_nodes += 1
        frames.append([left, pw, kids, 0, tokens, base, stats.paths_emitted])
        pending += len(kids)
        if pending > stats.container_peak:
            stats.container_peak = pending

    try:
        call(s, budget0, 0, root=True)
        while frames:
            fr = frames[-1]
            kids = fr[2]
            if fr[3] < len(kids):
                v, w = kids[fr[3]]
                fr[3] += 1
                pending -= 1
                call(v, fr[0] - w, fr[1] + w)
                continue
            frames.pop()
            for tok in reversed(fr[4]):
                g.restore(tok)
            if fr[6] == stats.paths_emitted and frames:
                stats.dead_calls += 1
            del path[fr[5]:]
    finally:
        while frames:
            for tok in reversed(frames.pop()[4]):
                g.restore(tok)
    return stats.finish()
