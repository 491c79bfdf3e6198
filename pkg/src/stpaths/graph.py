"""Mutable adjacency graph with exact weights and LIFO undo of removals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

Weight = Fraction

# Sentinel ordered above every finite weight ("unreachable", "no budget").
INF = math.inf


class GraphError(ValueError):
    """Invalid construction or mutation of a graph."""


class UndoOrderError(RuntimeError):
    """An undo token was restored out of LIFO order."""


def as_weight(x) -> Weight:
    """Convert an int, str literal, Fraction or float to an exact weight."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a weight")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite weight {x!r}")
        # decimal intent, not the binary expansion
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to a weight")


def format_weight(w) -> str:
    if w == INF:
        return "inf"
    w = as_weight(w)
    if w.denominator == 1:
        return str(w.numerator)
    return f"{w.numerator}/{w.denominator}"


@dataclass(frozen=True)
class Path:
    """A simple path given by its vertex sequence, with cached total weight.

    A path with a single vertex is the empty path starting at that vertex.
    """

    vertices: tuple
    weight: Weight = Fraction(0)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return list(zip(vs, vs[1:]))

    def __len__(self) -> int:
        return len(self.vertices) - 1


class Graph:
    """Directed or undirected graph on dense vertex ids ``0..n-1``.

    An undirected edge is stored as two mate arcs of equal weight, so
    ``out_arcs`` and ``in_arcs`` coincide for undirected graphs. Removal is
    lazy: dead arcs stay in the adjacency lists and are skipped, which makes
    restoring a removal exact.
    """

    def __init__(self, n: int, directed: bool = True):
        if n < 0:
            raise GraphError("negative vertex count")
        self.n = n
        self.directed = directed
        self._head: list[int] = []
        self._tail: list[int] = []
        self._w: list[Fraction] = []
        self._iw: list[int] = []
        self._mate: list[int] = []
        self._alive: list[bool] = []
        self._out: list[list[int]] = [[] for _ in range(n)]
        self._in: list[list[int]] = [[] for _ in range(n)]
        self._valive = [True] * n
        self._index: dict[tuple[int, int], int] = {}
        self._undo: list[tuple] = []
        self._alive_arcs = 0
        self._alive_negative = 0
        self._nonunit = 0
        self.scale = 1
        self._views = None

    @classmethod
    def from_arcs(cls, n: int, arcs, directed: bool = True) -> "Graph":
        g = cls(n, directed)
        for u, v, w in arcs:
            g.add_arc(u, v, w)
        return g

    # construction

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range 0..{self.n - 1}")

    def _new_arc(self, u: int, v: int, w: Fraction, iw: int) -> int:
        a = len(self._head)
        self._views = None
        self._tail.append(u)
        self._head.append(v)
        self._w.append(w)
        self._iw.append(iw)
        self._mate.append(-1)
        self._alive.append(True)
        self._out[u].append(a)
        self._in[v].append(a)
        self._index[(u, v)] = a
        self._alive_arcs += 1
        if w < 0:
            self._alive_negative += 1
        if w != 1:
            self._nonunit += 1
        return a

    def add_arc(self, u: int, v: int, w=1) -> None:
        """Add arc ``u -> v`` (an edge ``u - v`` when undirected)."""
        self._check_vertex(u)
        self._check_vertex(v)
        if self._undo:
            raise GraphError("cannot add arcs while removals are pending")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if (u, v) in self._index or (not self.directed and (v, u) in self._index):
            raise GraphError(f"parallel arc {u} -> {v}")
        w = as_weight(w)
        self._rescale(w.denominator)
        iw = int(w * self.scale)
        a = self._new_arc(u, v, w, iw)
        if not self.directed:
            b = self._new_arc(v, u, w, iw)
            self._mate[a] = b
            self._mate[b] = a

    def _rescale(self, den: int) -> None:
        if self.scale % den == 0:
            return
        self.scale = math.lcm(self.scale, den)
        self._iw = [int(w * self.scale) for w in self._w]
        self._views = None

    def adjacency(self, reverse: bool = False) -> list:
        """Per-vertex lists of ``(arc id, other end, scaled weight)``, dead arcs included."""
        if self._views is None:
            iw, head, tail = self._iw, self._head, self._tail
            fwd = [[(a, head[a], iw[a]) for a in arcs] for arcs in self._out]
            rev = [[(a, tail[a], iw[a]) for a in arcs] for arcs in self._in]
            self._views = (fwd, rev)
        return self._views[1 if reverse else 0]

    # queries

    @property
    def m(self) -> int:
        """Number of alive arcs (alive edges when undirected)."""
        return self._alive_arcs if self.directed else self._alive_arcs // 2

    @property
    def unit_weights(self) -> bool:
        return self._nonunit == 0

    @property
    def has_negative(self) -> bool:
        """True when some alive arc has negative weight."""
        return self._alive_negative > 0

    def is_alive(self, v: int) -> bool:
        return self._valive[v]

    def vertices(self) -> Iterator[int]:
        return (v for v in range(self.n) if self._valive[v])

    def out_arcs(self, u: int) -> Iterator[tuple[int, Fraction]]:
        """Alive arcs leaving ``u`` as ``(head, weight)``, in insertion order."""
        alive, head, w = self._alive, self._head, self._w
        return ((head[a], w[a]) for a in self._out[u] if alive[a])

    def in_arcs(self, v: int) -> Iterator[tuple[int, Fraction]]:
        """Alive arcs entering ``v`` as ``(tail, weight)``."""
        alive, tail, w = self._alive, self._tail, self._w
        return ((tail[a], w[a]) for a in self._in[v] if alive[a])

    def has_arc(self, u: int, v: int) -> bool:
        a = self._index.get((u, v))
        return a is not None and self._alive[a]

    def weight(self, u: int, v: int) -> Fraction:
        a = self._index.get((u, v))
        if a is None or not self._alive[a]:
            raise KeyError((u, v))
        return self._w[a]

    def arcs(self) -> Iterator[tuple[int, int, Fraction]]:
        """Alive arcs ``(u, v, w)``; each undirected edge is listed once."""
        for a in range(len(self._head)):
            if not self._alive[a]:
                continue
            if not self.directed and self._mate[a] < a:
                continue
            yield self._tail[a], self._head[a], self._w[a]

    def arc_set(self) -> frozenset:
        if self.directed:
            return frozenset(self.arcs())
        return frozenset((min(u, v), max(u, v), w) for u, v, w in self.arcs())

    def copy(self) -> "Graph":
        """Independent copy holding only the alive part of the graph."""
        g = Graph(self.n, self.directed)
        for u, v, w in self.arcs():
            g.add_arc(u, v, w)
        for v in range(self.n):
            g._valive[v] = self._valive[v]
        return g

    def reversed(self) -> "Graph":
        if not self.directed:
            return self.copy()
        return Graph.from_arcs(self.n, ((v, u, w) for u, v, w in self.arcs()))

    def bidirected(self) -> "Graph":
        """Directed graph with both orientations of every alive arc."""
        g = Graph(self.n, directed=True)
        for u, v, w in self.arcs():
            g.add_arc(u, v, w)
            if not self.directed:
                g.add_arc(v, u, w)
        return g

    def scale_budget(self, alpha) -> float | int:
        """Largest scaled integer ``b`` with ``b <= alpha * scale``."""
        if alpha == INF:
            return INF
        return math.floor(as_weight(alpha) * self.scale)

    def unscale(self, x: int) -> Fraction:
        return Fraction(x, self.scale)

    # mutation

    def _kill(self, a: int, killed: list[int]) -> None:
        self._alive[a] = False
        self._alive_arcs -= 1
        if self._w[a] < 0:
            self._alive_negative -= 1
        killed.append(a)

    def remove_vertex(self, v: int) -> int:
        """Remove ``v`` and its incident arcs; returns an undo token."""
        self._check_vertex(v)
        if not self._valive[v]:
            raise GraphError(f"vertex {v} is not alive")
        alive = self._alive
        killed: list[int] = []
        for a in self._out[v]:
            if alive[a]:
                self._kill(a, killed)
        for a in self._in[v]:
            if alive[a]:
                self._kill(a, killed)
        self._valive[v] = False
        self._undo.append((v, killed))
        return len(self._undo) - 1

    def remove_edge(self, u: int, v: int) -> int:
        """Remove arc ``u -> v`` (both mates when undirected); returns a token."""
        a = self._index.get((u, v))
        if a is None and not self.directed:
            a = self._index.get((v, u))
        if a is None or not self._alive[a]:
            raise GraphError(f"no alive arc {u} -> {v}")
        killed: list[int] = []
        self._kill(a, killed)
        if self._mate[a] >= 0:
            self._kill(self._mate[a], killed)
        self._undo.append((None, killed))
        return len(self._undo) - 1

    def restore(self, token: int) -> None:
        if token != len(self._undo) - 1:
            raise UndoOrderError(
                f"token {token} restored out of order (top is {len(self._undo) - 1})"
            )
        v, killed = self._undo.pop()
        for a in killed:
            self._alive[a] = True
            self._alive_arcs += 1
            if self._w[a] < 0:
                self._alive_negative += 1
        if v is not None:
            self._valive[v] = True

    @property
    def pending_undo(self) -> int:
        return len(self._undo)

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


def path_weight(g: Graph, p: Path | tuple | list) -> Fraction:
    """Exact sum of arc weights along ``p``; raises if an arc is not alive."""
    vs = p.vertices if isinstance(p, Path) else tuple(p)
    total = Fraction(0)
    for u, v in zip(vs, vs[1:]):
        try:
            total += g.weight(u, v)
        except KeyError:
            raise GraphError(f"arc {u} -> {v} is not in the graph") from None
    return total
