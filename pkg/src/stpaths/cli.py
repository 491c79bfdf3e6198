"""Command line: ``stpaths enumerate | topk | verify``.

Exit codes: 0 success (also when no path exists), 1 usage error, 2 parse
error, 3 negative cycle, 4 a checked path line is wrong (``verify``).
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .directed import list_bounded_directed
from .formats import ParseError, format_path, parse_graph, parse_path_line, serialize_graph
from .graph import INF, GraphError, Path, format_weight, path_weight
from .shortest import NegativeCycle, johnson_reweight
from .stats import BoundedPathQuery, EnumStats
from .traversal import ContainerKind, list_iterative
from .undirected import list_bounded_undirected

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_NEGATIVE_CYCLE, EXIT_VERIFY = 0, 1, 2, 3, 4

ORDER_ENGINE = {
    "dfs": None,
    "reverse-dfs": ContainerKind.LIFO,
    "shortest-first": ContainerKind.MIN_KEY,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunReport:
    """Flat ``key = value`` summary of one run."""

    n: int
    m: int
    query: dict
    stats: EnumStats = field(default_factory=EnumStats)
    wall_total_ms: float = 0.0
    wall_max_gap_ms: float = 0.0

    def as_dict(self) -> dict:
        st = self.stats
        d = dict(self.query)
        d.update(
            n=self.n,
            m=self.m,
            gamma=st.paths_emitted,
            sssp_total=st.sssp_total,
            sssp_max_between_emissions=st.sssp_max_between_emissions,
            container_peak=st.container_peak,
            internal_nodes=st.internal_nodes,
            leaves=st.leaves,
            wall_total_ms=round(self.wall_total_ms, 3),
            wall_max_gap_ms=round(self.wall_max_gap_ms, 3),
        )
        return d

    def to_text(self) -> str:
        return "".join(f"{k} = {v}\n" for k, v in self.as_dict().items())


def parse_report(text: str) -> dict:
    out = {}
    for line in text.splitlines():
        if line.strip():
            k, _, v = line.partition("=")
            out[k.strip()] = v.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stpaths", description="List bounded-length simple st-paths.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp):
        sp.add_argument("graph", help="graph file in DIMACS 'p sp' format")
        sp.add_argument("--source", "-s", type=int, required=True, help="source vertex (1-based)")
        sp.add_argument("--target", "-t", type=int, required=True, help="target vertex (1-based)")
        sp.add_argument("--undirected", action="store_true", help="read 'a' lines as edges")
        sp.add_argument("--stats", metavar="PATH", help="write a run report to PATH")

    e = sub.add_parser("enumerate", help="all paths of length at most --alpha")
    common(e)
    e.add_argument("--alpha", required=True, help="length bound (integer, decimal or num/den)")
    e.add_argument("--engine", choices=["recursive", "lcp", "iterative"])
    e.add_argument("--order", choices=list(ORDER_ENGINE))

    k = sub.add_parser("topk", help="the K shortest paths by increasing length")
    common(k)
    k.add_argument("--k", type=int, required=True)

    v = sub.add_parser("verify", help="re-check path lines against a graph")
    v.add_argument("graph")
    v.add_argument("paths", help="file of path lines, '-' for stdin")
    v.add_argument("--undirected", action="store_true")

    c = sub.add_parser("convert", help="re-serialize a graph file")
    c.add_argument("graph")
    c.add_argument("--undirected", action="store_true")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _pick_engine(args, undirected: bool):
    """Returns ``(engine, container kind or None)``."""
    engine, order = args.engine, args.order
    if engine == "lcp" and not undirected:
        raise UsageError("--engine lcp needs --undirected")
    kind = ORDER_ENGINE.get(order) if order else None
    if kind is not None:
        if engine not in (None, "iterative"):
            raise UsageError(f"--order {order} needs the iterative engine")
        return "iterative", kind
    if engine == "iterative":
        if order == "dfs":
            raise UsageError("--order dfs is not available with --engine iterative")
        return "iterative", ContainerKind.LIFO
    if engine is None:
        engine = "lcp" if undirected else "recursive"
    return engine, None


class _Sink:
    """Writes path lines as they come and tracks the largest gap between them."""

    def __init__(self, out, shift=Fraction(0)):
        self.out = out
        self.shift = shift
        self.start = self.last = time.perf_counter()
        self.max_gap = 0.0
        self.lines = 0

    def __call__(self, p: Path) -> None:
        now = time.perf_counter()
        self.max_gap = max(self.max_gap, now - self.last)
        self.last = now
        self.out.write(format_path(p, p.weight - self.shift) + "\n")
        self.out.flush()
        self.lines += 1


def _run_query(args, out, err) -> int:
    text = _read(args.graph)
    g = parse_graph(text, undirected=args.undirected)
    s, t = args.source - 1, args.target - 1
    for name, v in (("--source", args.source), ("--target", args.target)):
        if not 1 <= v <= g.n:
            raise UsageError(f"{name} {v} out of range 1..{g.n}")

    if args.command == "enumerate":
        try:
            alpha = Fraction(args.alpha)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--alpha {args.alpha!r} is not a number") from None
        engine, kind = _pick_engine(args, args.undirected)
        query = {"source": args.source, "target": args.target, "alpha": format_weight(alpha),
                 "mode": "enumerate", "engine": engine + (f"/{kind.value}" if kind else "")}
    else:
        if args.k < 1:
            raise UsageError("--k must be at least 1")
        alpha = INF
        engine, kind = "iterative", ContainerKind.MIN_KEY
        query = {"source": args.source, "target": args.target, "k": args.k,
                 "mode": "topk", "engine": "iterative/min-key"}

    work, shift = g, Fraction(0)
    if g.has_negative:
        rw = johnson_reweight(g, s, t)
        err.write(f"note: negative weights, reweighted (path lengths shift by {format_weight(rw.constant)})\n")
        work, shift = rw.graph, rw.constant
        alpha = rw.budget(alpha)

    sink = _Sink(out, shift)
    q = BoundedPathQuery(work, s, t, alpha)
    if args.command == "topk":
        stats = list_iterative(q, kind, sink, limit=args.k)
    elif engine == "recursive":
        stats = list_bounded_directed(q, sink)
    elif engine == "lcp":
        stats = list_bounded_undirected(q, sink)
    else:
        stats = list_iterative(q, kind, sink)
    total = time.perf_counter() - sink.start
    gap = max(sink.max_gap, time.perf_counter() - sink.last) if sink.lines else total

    if args.stats:
        report = RunReport(g.n, g.m, query, stats, total * 1000, gap * 1000)
        with open(args.stats, "w", encoding="utf-8") as f:
            f.write(report.to_text())
    return EXIT_OK


def _verify(args, out, err) -> int:
    g = parse_graph(_read(args.graph), undirected=args.undirected)
    bad = 0
    count = 0
    for lineno, line in enumerate(_read(args.paths).splitlines(), 1):
        if not line.strip():
            continue
        count += 1
        w, vs = parse_path_line(line, lineno)
        problem = None
        if any(not 0 <= v < g.n for v in vs):
            problem = "vertex out of range"
        elif len(set(vs)) != len(vs):
            problem = "repeated vertex"
        else:
            try:
                actual = path_weight(g, vs)
            except GraphError as e:
                problem = str(e)
            else:
                if actual != w:
                    problem = f"weight {format_weight(w)} != {format_weight(actual)}"
        if problem:
            bad += 1
            err.write(f"line {lineno}: {problem}\n")
    out.write(f"{count - bad}/{count} paths ok\n")
    return EXIT_OK if bad == 0 else EXIT_VERIFY


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing command (enumerate, topk, verify, convert)")
        if args.command == "verify":
            return _verify(args, out, err)
        if args.command == "convert":
            out.write(serialize_graph(parse_graph(_read(args.graph), args.undirected)))
            return EXIT_OK
        return _run_query(args, out, err)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return EXIT_PARSE
    except NegativeCycle as e:
        err.write(f"negative cycle through vertex {e.vertex + 1}\n")
        return EXIT_NEGATIVE_CYCLE
    except OSError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
