"""Exhaustive reference enumeration, for small graphs only."""

from __future__ import annotations

from fractions import Fraction

from .graph import INF, Graph, Path


def brute_force_paths(g: Graph, s: int, t: int, alpha=INF) -> list[Path]:
    """All simple ``s -> t`` paths of weight ``<= alpha``, sorted by vertex sequence.

    Plain depth-first search over simple paths with no pruning other than
    simplicity; weights are summed only once a path reaches ``t``.
    """
    found: list[Path] = []

    def walk(path: list[int], on_path: set[int]) -> None:
        u = path[-1]
        if u == t:
            w = sum((g.weight(a, b) for a, b in zip(path, path[1:])), Fraction(0))
            if w <= alpha:
                found.append(Path(tuple(path), w))
            return
        for v, _ in g.out_arcs(u):
            if v not in on_path:
                path.append(v)
                on_path.add(v)
                walk(path, on_path)
                on_path.discard(v)
                path.pop()

    walk([s], {s})
    found.sort(key=lambda p: p.vertices)
    return found
