"""Named grid states and the generators built around them.

Every named entry carries the properties it is known to have; they are
re-checked when the entry is built so a mistyped edge list fails loudly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterator, Sequence

import numpy as np

from .criteria import degree_criterion, separable_2xq
from .graph import (
    GridError,
    GridGraph,
    all_cuts,
    all_possible_edges,
    check_dims,
    component_count,
    flatten,
    grid_rank,
    isolated_vertices,
    permute_parties,
    standard_cut,
    validate,
)
from .surgery import product_span_bound, surgery_terminals


class CatalogError(AssertionError):
    """A catalog entry does not have the properties it claims."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: GridGraph
    expected: dict[str, Any] = field(default_factory=dict)


def _measure(G: GridGraph, prop: str) -> Any:
    if prop == "components":
        return component_count(G)
    if prop == "rank":
        return grid_rank(G)
    if prop == "edges":
        return len(G.edges)
    if prop == "ppt":
        return all(degree_criterion(G, c).ppt for c in all_cuts(G.nparties))
    if prop == "npt_witness":
        return degree_criterion(G, standard_cut(G.nparties)).witness_vertex
    if prop == "separable_2xq":
        return separable_2xq(G, standard_cut(G.nparties))
    if prop == "isolated":
        return frozenset(isolated_vertices(G))
    if prop == "permutation_invariant":
        return all(permute_parties(G, p) == G for p in itertools.permutations(range(G.nparties)))
    if prop == "cyclic_invariant":
        n = G.nparties
        return all(permute_parties(G, [(q + s) % n for q in range(n)]) == G for s in range(n))
    if prop == "span_bound":
        # surgery verdict across every cut; 0 means no product vectors anywhere
        return max(product_span_bound(surgery_terminals(flatten(G, c))[0]) for c in all_cuts(G.nparties))
    raise KeyError(prop)


def checked(name: str, G: GridGraph, **expected) -> CatalogEntry:
    for prop, want in expected.items():
        got = _measure(G, prop)
        if prop == "isolated":
            ok = frozenset(want) <= got
        else:
            ok = got == want
        if not ok:
            raise CatalogError(f"{name}: expected {prop}={want!r}, measured {got!r}")
    return CatalogEntry(name, G, dict(expected))


FIG1A_EDGES = [((0, 0), (1, 1)), ((0, 1), (1, 0))]

FIG1B_EDGES = [
    ((0, 0), (2, 2)),
    ((0, 2), (2, 0)),
    ((0, 1), (0, 3)),
    ((1, 0), (2, 3)),
    ((1, 1), (1, 2)),
]

# 3x3 cross-hatch: four knight-move edges around an isolated centre
CROSS_HATCH_EDGES = [
    ((0, 0), (1, 2)),
    ((0, 1), (2, 0)),
    ((0, 2), (2, 1)),
    ((1, 0), (2, 2)),
]

SQUARE_LOOP_EDGES = [
    ((0, 0), (4, 4)),
    ((0, 1), (3, 0)),
    ((0, 2), (1, 1)),
    ((0, 3), (1, 2)),
    ((0, 4), (1, 3)),
    ((1, 0), (3, 3)),
    ((1, 3), (3, 1)),
    ((1, 4), (2, 0)),
    ((2, 1), (3, 3)),
    ((2, 3), (4, 1)),
    ((2, 4), (3, 0)),
    ((3, 1), (4, 0)),
    ((3, 2), (4, 3)),
    ((3, 4), (4, 2)),
]

X_GRAPH_EDGES = [((0, 0), (4, 4)), ((0, 4), (4, 0))]

# stitch edges that replay the published row-surgery sequence on the square loop
SQUARE_LOOP_STITCHES = [((0, 4), (3, 1)), ((0, 4), (4, 0))]

# 3x3x3 cross-hatch: a perfect matching of the 26 off-centre vertices, one
# main-diagonal edge plus four orbits under cyclic shifts of the parties
CROSS_HATCH_3D_EDGES = [
    ((0, 0, 0), (2, 2, 2)),
    ((0, 0, 1), (1, 2, 0)),
    ((0, 0, 2), (1, 2, 1)),
    ((0, 1, 0), (2, 0, 1)),
    ((0, 1, 1), (2, 0, 2)),
    ((0, 1, 2), (1, 0, 0)),
    ((0, 2, 0), (2, 1, 1)),
    ((0, 2, 1), (2, 1, 2)),
    ((0, 2, 2), (1, 1, 0)),
    ((1, 0, 1), (2, 2, 0)),
    ((1, 0, 2), (2, 2, 1)),
    ((1, 1, 2), (2, 0, 0)),
    ((1, 2, 2), (2, 1, 0)),
]


def gen_fig1a() -> CatalogEntry:
    G = validate([2, 2], FIG1A_EDGES)
    return checked("fig1a", G, edges=2, ppt=True, separable_2xq=True)


def gen_fig1b() -> CatalogEntry:
    G = validate([3, 4], FIG1B_EDGES)
    return checked("fig1b", G, ppt=False, npt_witness=(1, 0))


def tile(dims: Sequence[int], block: GridGraph) -> GridGraph:
    """Copy ``block`` into every whole block-sized cell of the grid; leftovers stay empty."""
    dims = check_dims(dims)
    counts = [d // b for d, b in zip(dims, block.dims)]
    edges = []
    for cell in itertools.product(*(range(c) for c in counts)):
        offset = [k * b for k, b in zip(cell, block.dims)]
        for u, v in block.edges:
            edges.append((tuple(o + x for o, x in zip(offset, u)), tuple(o + x for o, x in zip(offset, v))))
    return validate(dims, edges)


@lru_cache(maxsize=None)
def gen_cross_hatch(m: int = 3, n: int = 3) -> CatalogEntry:
    if m < 3 or n < 3:
        raise GridError(f"cross-hatch needs m, n >= 3, got {m}x{n}")
    base = validate([3, 3], CROSS_HATCH_EDGES)
    if (m, n) == (3, 3):
        return checked(
            "cross-hatch 3x3", base, edges=4, components=5, rank=4, ppt=True, isolated={(1, 1)}, span_bound=0
        )
    G = tile([m, n], base)
    cells = (m // 3) * (n // 3)
    return checked(f"cross-hatch {m}x{n}", G, edges=4 * cells, rank=4 * cells, ppt=True, span_bound=0)


def gen_square_loop() -> CatalogEntry:
    G = validate([5, 5], SQUARE_LOOP_EDGES)
    return checked("square-loop", G, edges=14, components=11, rank=14, ppt=True, isolated={(2, 2)})


def gen_x_graph() -> CatalogEntry:
    G = validate([5, 5], X_GRAPH_EDGES)
    return checked("x-graph", G, edges=2, components=23, rank=2, ppt=True)


@lru_cache(maxsize=None)
def gen_cross_hatch_3d(l: int = 3) -> CatalogEntry:
    if l < 3:
        raise GridError(f"3-d cross-hatch needs l >= 3, got {l}")
    base = validate([3, 3, 3], CROSS_HATCH_3D_EDGES)
    if l == 3:
        return checked(
            "cross-hatch 3x3x3", base, edges=13, rank=13, ppt=True, isolated={(1, 1, 1)}, cyclic_invariant=True,
            span_bound=0,
        )
    G = tile([l, l, l], base)
    cells = (l // 3) ** 3
    return checked(f"cross-hatch {l}x{l}x{l}", G, rank=13 * cells, ppt=True, cyclic_invariant=True, span_bound=0)


def random_graph(dims: Sequence[int], k: int, seed: int) -> GridGraph:
    """Uniformly random ``k``-edge graph; the same seed gives the same graph."""
    dims = check_dims(dims)
    nv = math.prod(dims)
    total = nv * (nv - 1) // 2
    if not 0 <= k <= total:
        raise GridError(f"cannot place {k} edges on {nv} vertices (max {total})")
    pool = all_possible_edges(dims)
    picks = np.random.default_rng(seed).choice(total, size=k, replace=False)
    return GridGraph(dims, frozenset(pool[i] for i in picks))


def enumerate_graphs(dims: Sequence[int], max_edges: int) -> Iterator[GridGraph]:
    """Every edge subset of size 0..max_edges once, by size then lexicographically."""
    dims = check_dims(dims)
    pool = all_possible_edges(dims)
    for k in range(0, max_edges + 1):
        for combo in itertools.combinations(pool, k):
            yield GridGraph(dims, frozenset(combo))


def count_graphs(dims: Sequence[int], max_edges: int) -> int:
    nv = math.prod(check_dims(dims))
    total = nv * (nv - 1) // 2
    return sum(math.comb(total, k) for k in range(0, max_edges + 1))


NAMED = {
    "fig1a": gen_fig1a,
    "fig1b": gen_fig1b,
    "cross-hatch": gen_cross_hatch,
    "square-loop": gen_square_loop,
    "x-graph": gen_x_graph,
    "cross-hatch-3d": gen_cross_hatch_3d,
}
