"""Container-driven traversal of the binary-partition recursion tree.

The nodes of the recursion tree are held in a container as frames. A
stack gives depth-first order (the recursive order reversed) with at most
``m`` frames held at once. A priority queue keyed by prefix weight plus the
remaining distance to ``t`` is an A* search on the tree, so paths come out
by non-decreasing weight; that is the K-shortest simple paths order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .directed import Emit
from .graph import INF, Graph, Path
from .shortest import distances
from .stats import BoundedPathQuery, EnumStats, require_non_negative


class ContainerKind(str, Enum):
    LIFO = "lifo"
    MIN_KEY = "min-key"


@dataclass
class Frame:
    """One recursion-tree node: endpoint, owned prefix and remaining budget.

    Weights are scaled integers of the graph. The residual graph of the
    frame is the input graph minus every prefix vertex except ``u``.
    """

    u: int
    prefix: tuple
    weight: int
    budget: object
    key: object = 0


class LifoContainer:
    def __init__(self):
        self._items: list[Frame] = []

    def push(self, frame: Frame) -> None:
        self._items.append(frame)

    def pop(self) -> Frame:
        return self._items.pop()

    def __len__(self) -> int:
        return len(self._items)


class MinKeyContainer:
    """Pops a frame of minimum key; equal keys come out in push order."""

    def __init__(self):
        self._heap: list = []
        self._seq = 0

    def push(self, frame: Frame) -> None:
        heapq.heappush(self._heap, (frame.key, self._seq, frame))
        self._seq += 1

    def pop(self) -> Frame:
        return heapq.heappop(self._heap)[2]

    def __len__(self) -> int:
        return len(self._heap)


def make_container(kind):
    kind = ContainerKind(kind)
    return LifoContainer() if kind is ContainerKind.LIFO else MinKeyContainer()


class _Residual:
    """Keeps the graph equal to ``G`` minus a given vertex sequence."""

    def __init__(self, g: Graph):
        self.g = g
        self.removed: list[int] = []
        self.tokens: list[int] = []

    def sync(self, vertices) -> None:
        c = 0
        rm = self.removed
        lim = min(len(rm), len(vertices))
        while c < lim and rm[c] == vertices[c]:
            c += 1
        while len(rm) > c:
            rm.pop()
            self.g.restore(self.tokens.pop())
        for v in vertices[c:]:
            self.push(v)

    def push(self, v: int) -> None:
        self.tokens.append(self.g.remove_vertex(v))
        self.removed.append(v)

    def clear(self) -> None:
        self.sync(())


def list_iterative(q: BoundedPathQuery, kind, emit: Emit, limit: int | None = None) -> EnumStats:
    """Emit the bounded st-paths by popping recursion-tree frames from a container.

    ``kind`` is ``"lifo"`` or ``"min-key"``. With ``limit`` the traversal
    stops right after that many emissions. The graph is restored on return.
    """
    g, s, t = q.graph, q.source, q.target
    require_non_negative(g)
    kind = ContainerKind(kind)
    stats = EnumStats()
    scale = g.scale
    budget0 = g.scale_budget(q.alpha)
    if limit is not None and limit <= 0:
        return stats.finish()

    out, head, iw, alive = g._out, g._head, g._iw, g._alive
    residual = _Residual(g)
    container = make_container(kind)

    def fits(d, room):
        return d is not None and d <= room

    try:
        if s == t:
            if budget0 < 0:
                return stats.finish()
            root_key = 0
        else:
            dist, _, _ = distances(g, t, reverse=True, bound=budget0, targets=[s])
            stats.count_sssp()
            if not fits(dist.get(s), budget0):
                return stats.finish()
            root_key = dist[s]
        container.push(Frame(s, (s,), 0, budget0, root_key))
        stats.container_peak = 1

        while container:
            fr = container.pop()
            u = fr.u
            if u == t:
                emit(Path(fr.prefix, Fraction(fr.weight, scale)))
                stats.count_emit()
                if limit is not None and stats.paths_emitted >= limit:
                    break
                continue
            stats.internal_nodes += 1
            residual.sync(fr.prefix[:-1])
            cand = [(head[a], iw[a]) for a in out[u] if alive[a]]
            residual.push(u)
            budget = fr.budget
            dist, _, _ = distances(g, t, reverse=True, bound=budget, targets=[v for v, _ in cand])
            stats.count_sssp()
            for v, w in cand:
                d = dist.get(v)
                if fits(d, budget - w):
                    weight = fr.weight + w
                    container.push(Frame(v, fr.prefix + (v,), weight, budget - w, weight + d))
            if len(container) > stats.container_peak:
                stats.container_peak = len(container)
    finally:
        residual.clear()
    return stats.finish()


def k_shortest(g: Graph, s: int, t: int, K: int, emit: Emit) -> EnumStats:
    """Emit the ``K`` shortest simple ``s -> t`` paths by non-decreasing weight."""
    if K < 1:
        raise ValueError("K must be a positive integer")
    return list_iterative(BoundedPathQuery(g, s, t, INF), ContainerKind.MIN_KEY, emit, limit=K)
