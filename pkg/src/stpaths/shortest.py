"""Single-source shortest paths, subtree queries and Johnson reweighting."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import INF, Graph, GraphError


class NegativeWeightError(GraphError):
    """A shortest-path search met an alive arc of negative weight."""


class NegativeCycle(GraphError):
    def __init__(self, vertex: int, cycle: list[int] | None = None):
        self.vertex = vertex
        self.cycle = cycle or [vertex]
        super().__init__(f"negative cycle through vertex {vertex}")


def distances(g: Graph, root: int, reverse: bool = False, bound=INF, targets=None):
    """Scaled integer distances from ``root`` (to ``root`` when ``reverse``).

    Only vertices at distance ``<= bound`` are settled. When ``targets`` is
    given the search stops as soon as every target is settled. Returns
    ``(dist, parent, order)`` where ``dist`` and ``parent`` are dicts over
    the settled vertices and ``order`` lists them in settling order.
    """
    if g.has_negative:
        raise NegativeWeightError("negative alive arc; reweight first")
    adj = g.adjacency(reverse)
    alive = g._alive
    dist = {root: 0}
    parent = {root: -1}
    order = [root]
    remaining = None
    if targets is not None:
        remaining = set(targets)
        remaining.discard(root)
        if not remaining:
            return dist, parent, order

    if g.unit_weights:
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            if du > bound:
                break
            for a, v, _ in adj[u]:
                if alive[a] and v not in dist:
                    dist[v] = du
                    parent[v] = u
                    order.append(v)
                    queue.append(v)
                    if remaining is not None:
                        remaining.discard(v)
                        if not remaining:
                            return dist, parent, order
        return dist, parent, order

    if bound < 0:
        return {}, {}, []
    # dist holds tentative labels; a vertex is settled once it enters order
    done = set()
    order = []
    heap = [(0, root)]
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        du, u = pop(heap)
        if u in done:
            continue
        if du > bound:
            break
        done.add(u)
        order.append(u)
        if remaining is not None and u in remaining:
            remaining.discard(u)
            if not remaining:
                break
        for a, v, w in adj[u]:
            if alive[a] and v not in done:
                dv = du + w
                old = dist.get(v)
                if old is None or dv < old:
                    dist[v] = dv
                    parent[v] = u
                    push(heap, (dv, v))
    return {v: dist[v] for v in order}, {v: parent[v] for v in order}, order


@dataclass(frozen=True)
class ShortestPathTree:
    """Shortest-path tree with Euler intervals for O(1) subtree tests.

    ``dist[v]`` is a Fraction, or ``INF`` when ``v`` is unreachable. For a
    reverse tree, distances are *to* the root and ``parent[v]`` is the next
    vertex on the way to the root.
    """

    root: int
    reverse: bool
    dist: list
    parent: list
    enter: list
    exit: list
    children: list

    def reachable(self, v: int) -> bool:
        return self.dist[v] != INF

    def path(self, v: int) -> list[int]:
        """Tree path between the root and ``v``, starting at the root."""
        if not self.reachable(v):
            raise GraphError(f"vertex {v} is unreachable")
        out = [v]
        while out[-1] != self.root:
            out.append(self.parent[out[-1]])
        out.reverse()
        return out

    def subtree_contains(self, v: int, z: int) -> bool:
        return subtree_contains(self, v, z)


def _euler_intervals(n: int, root: int, children: list) -> tuple[list, list]:
    enter = [-1] * n
    exit_ = [-1] * n
    clock = 0
    stack = [(root, 0)]
    enter[root] = clock
    clock += 1
    while stack:
        v, i = stack[-1]
        if i < len(children[v]):
            stack[-1] = (v, i + 1)
            c = children[v][i]
            enter[c] = clock
            clock += 1
            stack.append((c, 0))
        else:
            exit_[v] = clock
            stack.pop()
    return enter, exit_


def build_tree(g: Graph, root: int, dist: dict, parent: dict, order: list, reverse: bool):
    n = g.n
    d = [INF] * n
    par = [-1] * n
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order:
        d[v] = Fraction(dist[v], g.scale)
        p = parent[v]
        par[v] = p
        if p >= 0:
            children[p].append(v)
    enter, exit_ = _euler_intervals(n, root, children)
    return ShortestPathTree(root, reverse, d, par, enter, exit_, children)


def sssp(g: Graph, root: int, direction: str = "forward", bound=INF) -> ShortestPathTree:
    """Shortest-path tree rooted at ``root``.

    ``direction="reverse"`` follows in-arcs, giving distances to ``root``.
    BFS is used when every arc has weight 1, Dijkstra otherwise; heap ties
    break on vertex id. Vertices farther than ``bound`` are reported as
    unreachable.
    """
    if direction not in ("forward", "reverse"):
        raise ValueError(f"direction must be 'forward' or 'reverse', not {direction!r}")
    if not g.is_alive(root):
        raise GraphError(f"root {root} is not alive")
    reverse = direction == "reverse"
    dist, parent, order = distances(g, root, reverse, g.scale_budget(bound))
    return build_tree(g, root, dist, parent, order, reverse)


def subtree_contains(tree: ShortestPathTree, v: int, z: int) -> bool:
    """True iff ``z`` lies in the subtree of ``tree`` rooted at ``v``."""
    if tree.enter[v] < 0 or tree.enter[z] < 0:
        raise GraphError(f"vertex {v if tree.enter[v] < 0 else z} is not in the tree")
    return tree.enter[v] <= tree.enter[z] < tree.exit[v]


@dataclass
class ReweightResult:
    """Potentials ``h`` and the graph with ``w'(u,v) = w(u,v) + h(u) - h(v)``.

    Every st-path satisfies ``w'(path) = w(path) + constant``.
    """

    potential: list
    graph: Graph
    source: int
    target: int
    constant: Fraction

    def budget(self, alpha):
        """Bound on reweighted lengths equivalent to ``alpha`` on the original."""
        return alpha if alpha == INF else alpha + self.constant

    def original_weight(self, reweighted) -> Fraction:
        return reweighted - self.constant


def johnson_reweight(g: Graph, s: int, t: int) -> ReweightResult:
    """Non-negative reweighting preserving the order of st-path lengths.

    Bellman-Ford runs from a virtual source joined to ``s`` by a zero arc
    and to every other vertex by an arc heavier than any simple path, so
    potentials equal distances from ``s`` wherever those exist. Raises
    :class:`NegativeCycle` if some cycle has negative total weight.
    """
    n = g.n
    arcs = list(g.arcs())
    if not g.directed:
        arcs += [(v, u, w) for u, v, w in arcs]
    if not any(w < 0 for _, _, w in arcs):
        return ReweightResult([Fraction(0)] * n, g.copy(), s, t, Fraction(0))

    big = 1 + sum(abs(w) for _, _, w in arcs)
    h = [big] * n
    h[s] = Fraction(0)
    pred = [-1] * n
    last = -1
    for _ in range(n):
        last = -1
        for u, v, w in arcs:
            if h[u] + w < h[v]:
                h[v] = h[u] + w
                pred[v] = u
                last = v
        if last < 0:
            break
    if last >= 0:
        # still relaxing after n rounds: walk back n steps to land on the cycle
        x = last
        for _ in range(n):
            x = pred[x]
        cycle = [x]
        y = pred[x]
        while y != x:
            cycle.append(y)
            y = pred[y]
        cycle.reverse()
        raise NegativeCycle(x, cycle)

    rg = Graph(n, g.directed)
    for u, v, w in g.arcs():
        rg.add_arc(u, v, w + h[u] - h[v])
    for v in range(n):
        rg._valive[v] = g.is_alive(v)
    return ReweightResult(h, rg, s, t, h[s] - h[t])
