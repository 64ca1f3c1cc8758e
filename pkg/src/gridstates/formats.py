"""JSON graph documents and Graphviz export."""

from __future__ import annotations

import json

from .graph import GridError, GridGraph, validate


def parse_graph(data: bytes | str) -> GridGraph:
    """Read ``{"dims": [...], "edges": [[[...], [...]], ...]}``.

    Errors name the offending field (and line, for malformed JSON).
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GridError(f"graph file is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise GridError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise GridError("graph document must be a JSON object with 'dims' and 'edges'")
    missing = {"dims", "edges"} - set(doc)
    if missing:
        raise GridError(f"graph document lacks field(s): {', '.join(sorted(missing))}")
    dims, edges = doc["dims"], doc["edges"]
    if not isinstance(dims, list) or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise GridError(f"field 'dims' must be a list of integers, got {dims!r}")
    if not isinstance(edges, list):
        raise GridError(f"field 'edges' must be a list, got {type(edges).__name__}")
    for n, e in enumerate(edges):
        ok = (
            isinstance(e, list)
            and len(e) == 2
            and all(isinstance(c, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in c) for c in e)
        )
        if not ok:
            raise GridError(f"field 'edges'[{n}]: expected a pair of integer coordinate lists, got {e!r}")
    try:
        return validate(dims, edges)
    except GridError as exc:
        raise GridError(f"field 'edges': {exc}") from exc


def serialize_graph(G: GridGraph) -> bytes:
    doc = {"dims": list(G.dims), "edges": [[list(u), list(v)] for u, v in G.sorted_edges()]}
    return (json.dumps(doc) + "\n").encode("utf-8")


def _node(v) -> str:
    return "v" + "_".join(map(str, v))


def export_dot(G: GridGraph, gap: int = 1) -> str:
    """Graphviz document with pinned positions (x = column, y = -row).

    With more than two parties each value of the first party becomes its own
    block of the remaining (flattened) grid, laid out left to right with a
    ``gap``-column spacer.  Render with ``neato -n`` or ``fdp``.
    """
    if G.nparties == 2:

        def pos(v):
            return v[1], -v[0]
    else:
        rest = G.dims[1:]
        cols = 1
        for d in rest[1:]:
            cols *= d

        def pos(v):
            col = 0
            for c, d in zip(v[2:], rest[1:]):
                col = col * d + c
            return v[0] * (cols + gap) + col, -v[1]

    lines = ["graph G {", "  node [shape=circle, width=0.25, label=\"\"];"]
    for v in G.vertices():
        x, y = pos(v)
        lines.append(f'  {_node(v)} [pos="{x},{y}!"];')
    for u, v in G.sorted_edges():
        lines.append(f"  {_node(u)} -- {_node(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
