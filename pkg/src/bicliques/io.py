"""Bit-exact text formats for graphs.

General graphs: line 1 is ``n m``, then exactly m lines ``u v`` with
0 <= u < v < n. Bipartite graphs: line 1 is ``a b m``, then m lines ``u v``
with u an A-side index and v a B-side index. Canonical serialization sorts
edges by (u, v). LF endings, trailing newline required, no comments.
"""

import numpy as np

from bicliques.errors import ParseError
from bicliques.graph import BipartiteGraph, Graph

__all__ = ["parse_graph", "serialize_graph", "parse_bipartite", "serialize_bipartite"]


def _split_lines(text):
    if not text:
        raise ParseError(1, "empty input")
    parts = text.split("\n")
    if parts[-1] != "":
        raise ParseError(len(parts), "missing trailing newline")
    return parts[:-1]


def _header_ints(line, count, what):
    fields = line.split(" ")
    if len(fields) != count or not all(f.isdigit() for f in fields):
        raise ParseError(1, f"header must be {what}")
    return [int(f) for f in fields]


def _edge_ints(line, lineno):
    fields = line.split(" ")
    if len(fields) != 2 or not all(f.isdigit() for f in fields):
        raise ParseError(lineno, "edge line must be two integers")
    return int(fields[0]), int(fields[1])


def parse_graph(text):
    lines = _split_lines(text)
    n, m = _header_ints(lines[0], 2, "'n m'")
    if m > n * (n - 1) // 2:
        raise ParseError(1, "edge count exceeds maximum for vertex count")
    if len(lines) - 1 != m:
        raise ParseError(len(lines) + 1, f"expected {m} edge lines, found {len(lines) - 1}")
    us = np.empty(m, dtype=np.int64)
    vs = np.empty(m, dtype=np.int64)
    seen = set()
    for i in range(m):
        lineno = i + 2
        u, v = _edge_ints(lines[i + 1], lineno)
        if u >= n or v >= n:
            raise ParseError(lineno, "vertex out of range")
        if u >= v:
            raise ParseError(lineno, "expected u < v")
        if (u, v) in seen:
            raise ParseError(lineno, "duplicate edge")
        seen.add((u, v))
        us[i] = u
        vs[i] = v
    return Graph._from_arrays(n, us, vs)


def serialize_graph(g):
    u, v = g.edges()
    out = [f"{g.n} {g.m}"]
    out.extend(f"{int(a)} {int(b)}" for a, b in zip(u, v))
    out.append("")
    return "\n".join(out)


def parse_bipartite(text):
    lines = _split_lines(text)
    a, b, m = _header_ints(lines[0], 3, "'a b m'")
    if m > a * b:
        raise ParseError(1, "edge count exceeds maximum for side sizes")
    if len(lines) - 1 != m:
        raise ParseError(len(lines) + 1, f"expected {m} edge lines, found {len(lines) - 1}")
    us = np.empty(m, dtype=np.int64)
    vs = np.empty(m, dtype=np.int64)
    seen = set()
    for i in range(m):
        lineno = i + 2
        u, v = _edge_ints(lines[i + 1], lineno)
        if u >= a or v >= b:
            raise ParseError(lineno, "vertex out of range")
        if (u, v) in seen:
            raise ParseError(lineno, "duplicate edge")
        seen.add((u, v))
        us[i] = u
        vs[i] = v
    return BipartiteGraph._from_arrays(a, b, us, vs)


def serialize_bipartite(bg):
    u, v = bg.edges_original()
    out = [f"{bg.orig_a} {bg.orig_b} {bg.m}"]
    out.extend(f"{int(x)} {int(y)}" for x, y in zip(u, v))
    out.append("")
    return "\n".join(out)
