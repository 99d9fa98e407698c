"""Plain text graph files.

Format, one record per line:

    c <free text>       comment, ignored
    p <n> <m>           vertex and edge counts, exactly once, first
    e <u> <v>           one per edge, 1-based ids, m lines total

Written files are canonical: edges normalized to (low, high), duplicates
dropped, sorted.  parse(format(g)) reproduces g and format(parse(text))
reproduces canonical text byte for byte.
"""

from __future__ import annotations

from .oracle import PlainGraph


class GraphFormatError(ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def parse_graph(text: str) -> PlainGraph:
    n = None
    declared_m = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate p line", lineno)
            if len(fields) != 3:
                raise GraphFormatError("expected 'p <n> <m>'", lineno)
            try:
                n, declared_m = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("p line fields must be integers", lineno)
            if n < 1:
                raise GraphFormatError("vertex count must be at least 1", lineno)
            if declared_m < 0:
                raise GraphFormatError("edge count cannot be negative", lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError("e line before the p line", lineno)
            if len(fields) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("edge endpoints must be integers", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint outside 1..{n}", lineno)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown record type {fields[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing p line")
    if len(edges) != declared_m:
        raise GraphFormatError(f"p line declares {declared_m} edges, found {len(edges)}")
    return PlainGraph(n, edges)


def format_graph(g: PlainGraph) -> str:
    lines = [f"p {g.n} {g.m}"]
    for u, v in g.edges:
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def load_graph(path) -> PlainGraph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())


def save_graph(g: PlainGraph, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_graph(g))
