from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph import INF, Graph, GraphError, as_weight
from .shortest import NegativeWeightError


class EmptyPathSet(LookupError):
    """No alpha-bounded path exists between the requested vertices."""


@dataclass
class BoundedPathQuery:
    graph: Graph
    source: int
    target: int
    alpha: object = INF

    def __post_init__(self):
        g = self.graph
        for v in (self.source, self.target):
            if not (0 <= v < g.n) or not g.is_alive(v):
                raise GraphError(f"vertex {v} is not an alive vertex of the graph")
        if self.alpha != INF:
            self.alpha = as_weight(self.alpha)


def require_non_negative(g: Graph) -> None:
    if g.has_negative:
        raise NegativeWeightError("negative alive arc; apply johnson_reweight first")


@dataclass
class EnumStats:
    """Counters observed during one enumeration.

    ``sssp_max_between_emissions`` counts shortest-path computations in the
    worst gap between two emissions (including before the first one).
    ``container_peak`` is the largest number of pending recursion-tree
    nodes held at once. ``single_child_nodes`` and ``dead_calls`` count
    internal nodes with one child and non-root calls emitting nothing.
    """

    paths_emitted: int = 0
    sssp_total: int = 0
    sssp_max_between_emissions: int = 0
    container_peak: int = 0
    internal_nodes: int = 0
    leaves: int = 0
    single_child_nodes: int = 0
    dead_calls: int = 0
    _since_emit: int = 0

    def count_sssp(self, k: int = 1) -> None:
        self.sssp_total += k
        self._since_emit += k

    def count_emit(self) -> None:
        self.paths_emitted += 1
        self.leaves += 1
        self._close_gap()

    def _close_gap(self) -> None:
        if self._since_emit > self.sssp_max_between_emissions:
            self.sssp_max_between_emissions = self._since_emit
        self._since_emit = 0

    def finish(self) -> "EnumStats":
        self._close_gap()
        return self

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("_since_emit")
        return d
