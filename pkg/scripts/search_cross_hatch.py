"""Enumerate 3x3 graphs matching the cross-hatch narrative.

Constraints: (1,1) isolated and viable, five components, PPT, CCNR fires,
row surgery at (1,1) leaves exactly (0,0) and (2,2) viable, column surgery
at (0,0) on that graph leaves a single diagonal edge, and every surgery
sequence ends in the empty graph.

    python scripts/search_cross_hatch.py [--max-edges 5]
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from gridstates.catalog import CROSS_HATCH_EDGES, enumerate_graphs
from gridstates.criteria import ccnr_entangled, degree_criterion
from gridstates.graph import component_count, standard_cut, validate, viable_vertices
from gridstates.surgery import column_surgery, row_surgery, surgery_terminals


@dataclass
class CrossHatchConfig:
    max_edges: int = 5


def matches(G) -> bool:
    cut = standard_cut()
    if viable_vertices(G) != {(1, 1)} or component_count(G) != 5:
        return False
    if not degree_criterion(G, cut).ppt:
        return False
    b, _ = row_surgery(G, (1, 1))
    if viable_vertices(b) != {(0, 0), (2, 2)}:
        return False
    c, _ = column_surgery(b, (0, 0))
    if len(c.edges) != 1 or any(u[0] == v[0] or u[1] == v[1] for u, v in c.edges):
        return False
    terminals, _ = surgery_terminals(G)
    if any(T.edges for T in terminals):
        return False
    return ccnr_entangled(G, cut)[1]


def main() -> None:
    parser = argparse.ArgumentParser(description="cross-hatch constraint search")
    parser.add_argument("--max-edges", type=int, default=5)
    cfg = CrossHatchConfig(**vars(parser.parse_args()))
    hits = [G for G in enumerate_graphs([3, 3], cfg.max_edges) if G.edges and matches(G)]
    for G in hits:
        print(len(G.edges), "edges:", G.sorted_edges())
    print(f"{len(hits)} matching graphs; catalog graph found: {validate([3, 3], CROSS_HATCH_EDGES) in hits}")


if __name__ == "__main__":
    main()
