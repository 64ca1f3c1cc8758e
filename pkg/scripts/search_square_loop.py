"""Constraint search for the 5x5 square-loop graph.

The narrative fixes: 25 vertices in 11 components, PPT, row surgery at
(2,2) leaves exactly (1,4) and (4,1) viable, row surgery at (1,4) must
stitch (0,4)-(3,1), a further row surgery must stitch (0,4)-(4,0) and
produce the two-edge X graph, and every surgery sequence ends at the empty
graph or the X graph.  The search builds the post-(2,2) graph as a path
(0,4)-(1,a)-(3,1)-(4,0) plus the diagonal (0,0)-(4,4) plus a matching of the
remaining vertices, then adds row-2 edges that repair the degree balance.

    python scripts/search_square_loop.py
"""

from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from gridstates.catalog import SQUARE_LOOP_EDGES, X_GRAPH_EDGES
from gridstates.criteria import degree_criterion
from gridstates.graph import GridGraph, component_count, standard_cut, validate, viable_vertices
from gridstates.surgery import row_surgery, surgery_terminals

DIMS = (5, 5)
KEPT_ROWS = (0, 1, 3, 4)


@dataclass
class SquareLoopConfig:
    max_vertical: int = 2
    limit: int | None = None


def matchings(verts, allowed):
    if not verts:
        yield []
        return
    v = verts[0]
    for w in verts[1:]:
        if allowed(v, w):
            rest = [u for u in verts if u not in (v, w)]
            for m in matchings(rest, allowed):
                yield [(v, w)] + m


def touches_cut_rows(v, w):
    # rows 1 and 3 carry the later surgeries, so every edge needs one of them
    return bool({v[0], w[0]} & {1, 3})


def degree_deficits(G: GridGraph) -> dict:
    d: dict = {}
    for u, v in G.edges:
        d[u] = d.get(u, 0) + 1
        d[v] = d.get(v, 0) + 1
    for (i, j), (k, l) in G.edges:
        for w in ((i, l), (k, j)):
            d[w] = d.get(w, 0) - 1
    return {k: v for k, v in d.items() if v}


def row2_completions(deficits):
    """Edges (2,x)-(r,y) that move one unit of degree from column x to y in row r."""
    per_row = []
    for r in KEPT_ROWS:
        plus = [c for (rr, c), v in deficits.items() if rr == r and v < 0 for _ in range(-v)]
        minus = [c for (rr, c), v in deficits.items() if rr == r and v > 0 for _ in range(v)]
        if len(plus) != len(minus):
            return
        options = []
        for perm in set(itertools.permutations(plus)):
            pairs = list(zip(minus, perm))
            if any(x == 2 or x == y for x, y in pairs):
                continue
            options.append([((2, x), (r, y)) for x, y in pairs])
        per_row.append(options)
    for combo in itertools.product(*per_row):
        yield [e for part in combo for e in part]


def search(cfg: SquareLoopConfig):
    X = validate(DIMS, X_GRAPH_EDGES)
    pool = [(r, c) for r in KEPT_ROWS for c in range(5) if (r, c) not in [(1, 4), (4, 1)]]
    found = []
    for a in range(4):
        path = [((0, 4), (1, a)), ((1, a), (3, 1)), ((3, 1), (4, 0))]
        used = {(0, 0), (4, 4), (0, 4), (1, a), (3, 1), (4, 0)}
        for M in matchings([v for v in pool if v not in used], touches_cut_rows):
            b = validate(DIMS, [((0, 0), (4, 4))] + path + M)
            if viable_vertices(b) != {(1, 4), (4, 1)}:
                continue
            c, step = row_surgery(b, (1, 4))
            if step.stitched_edges != {((0, 4), (3, 1))}:
                continue
            if not any(
                row_surgery(c, v)[0] == X and row_surgery(c, v)[1].stitched_edges == {((0, 4), (4, 0))}
                for v in sorted(viable_vertices(c))
                if v[0] == 3
            ):
                continue
            verticals = [((2, x), (r, x)) for x in (0, 1, 3, 4) for r in KEPT_ROWS]
            for extra in row2_completions(degree_deficits(b)):
                for k in range(cfg.max_vertical + 1):
                    for V in itertools.combinations(verticals, k):
                        g = validate(DIMS, list(b.edges) + extra + list(V))
                        if component_count(g) != 11 or (2, 2) not in viable_vertices(g):
                            continue
                        if not degree_criterion(g, standard_cut()).ppt or row_surgery(g, (2, 2))[0] != b:
                            continue
                        T, _ = surgery_terminals(g)
                        if all(t == X or not t.edges for t in T):
                            found.append(g)
                            print(f"candidate {len(found)}: {len(g.edges)} edges", g.sorted_edges(), flush=True)
                            if cfg.limit and len(found) >= cfg.limit:
                                return found
    return found


def main() -> None:
    parser = argparse.ArgumentParser(description="square-loop constraint search")
    parser.add_argument("--max-vertical", type=int, default=2)
    parser.add_argument("--limit", type=int)
    found = search(SquareLoopConfig(**vars(parser.parse_args())))
    catalog = validate(DIMS, SQUARE_LOOP_EDGES)
    print(f"{len(found)} candidates; catalog graph is candidate", [g == catalog for g in found].index(True) + 1)


if __name__ == "__main__":
    main()
