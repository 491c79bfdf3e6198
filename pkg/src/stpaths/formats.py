"""DIMACS-style graph files and the tab-separated path line format.

Graph files::

    c comment
    p sp <n> <m>
    a <u> <v> <w>

Vertex ids are 1-based in files and 0-based in memory. Weights are integer,
decimal or ``num/den`` literals, parsed exactly. A path line is
``<weight>\\t<v0> <v1> ... <vk>`` in file ids.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Graph, GraphError, Path, format_weight


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}")


def _parse_weight(tok: str, lineno: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"non-numeric weight {tok!r}") from None


def _parse_int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what} {tok!r} is not an integer") from None


def parse_graph(text: str | bytes, undirected: bool = False) -> Graph:
    """Build a graph from DIMACS shortest-path text; ``undirected`` reads edges."""
    if isinstance(text, bytes):
        text = text.decode()
    g = None
    declared_m = 0
    count = 0
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if g is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "sp":
                raise ParseError(lineno, "malformed header, expected 'p sp <n> <m>'")
            n = _parse_int(parts[2], lineno, "vertex count")
            declared_m = _parse_int(parts[3], lineno, "arc count")
            if n < 0 or declared_m < 0:
                raise ParseError(lineno, "malformed header, negative size")
            g = Graph(n, directed=not undirected)
        elif parts[0] == "a":
            if g is None:
                raise ParseError(lineno, "arc before the problem line")
            if len(parts) != 4:
                raise ParseError(lineno, "malformed arc, expected 'a <u> <v> <w>'")
            u = _parse_int(parts[1], lineno, "vertex id")
            v = _parse_int(parts[2], lineno, "vertex id")
            for x in (u, v):
                if not 1 <= x <= g.n:
                    raise ParseError(lineno, f"vertex id {x} out of range 1..{g.n}")
            w = _parse_weight(parts[3], lineno)
            try:
                g.add_arc(u - 1, v - 1, w)
            except GraphError as e:
                what = "self-loop" if u == v else "duplicate arc"
                raise ParseError(lineno, f"{what} {u} {v}") from e
            count += 1
        else:
            raise ParseError(lineno, f"unknown line type {parts[0]!r}")
    if g is None:
        raise ParseError(lineno, "missing problem line 'p sp <n> <m>'")
    if count != declared_m:
        raise ParseError(lineno, f"header declares {declared_m} arcs, found {count}")
    return g


def serialize_graph(g: Graph) -> str:
    arcs = list(g.arcs())
    lines = [f"p sp {g.n} {len(arcs)}"]
    lines += [f"a {u + 1} {v + 1} {format_weight(w)}" for u, v, w in arcs]
    return "\n".join(lines) + "\n"


def format_path(p: Path, weight=None) -> str:
    w = p.weight if weight is None else weight
    return format_weight(w) + "\t" + " ".join(str(v + 1) for v in p.vertices)


def parse_path_line(line: str, lineno: int = 0) -> tuple[Fraction, list[int]]:
    """Inverse of :func:`format_path`; returns the weight and 0-based vertices."""
    wtok, sep, rest = line.rstrip("\n").partition("\t")
    if not sep or not rest.strip():
        raise ParseError(lineno, "expected '<weight><TAB><vertices>'")
    w = _parse_weight(wtok, lineno)
    vs = [_parse_int(tok, lineno, "vertex id") - 1 for tok in rest.split()]
    return w, vs
