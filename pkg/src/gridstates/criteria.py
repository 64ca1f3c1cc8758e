"""Graphical entanglement criteria across a single cut."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Bipartition, Coord, GridGraph, canonical_edge, flatten, require_edges
from .spectral import CCNR_TOL, density, realign, trace_norm


@dataclass(frozen=True)
class PptReport:
    cut: Bipartition
    ppt: bool
    witness_vertex: Coord | None = None

    def __post_init__(self):
        if self.ppt != (self.witness_vertex is None):
            raise ValueError("an NPT report needs a witness vertex, a PPT report must not have one")


def graph_partial_transpose(G: GridGraph, cut: Bipartition) -> GridGraph:
    """Flip every edge {(i,j),(k,l)} of the flattened graph to {(i,l),(k,j)}."""
    F = flatten(G, cut)
    edges = frozenset(canonical_edge((i, l), (k, j)) for (i, j), (k, l) in F.edges)
    return GridGraph(F.dims, edges)


def degree_criterion(G: GridGraph, cut: Bipartition) -> PptReport:
    F = flatten(G, cut)
    Fg = graph_partial_transpose(F, Bipartition((0,), (1,)))
    before, after = F._degrees, Fg._degrees
    changed = [v for v in set(before) | set(after) if before.get(v, 0) != after.get(v, 0)]
    if not changed:
        return PptReport(cut, True)
    return PptReport(cut, False, min(changed))


def separable_2xq(G: GridGraph, cut: Bipartition) -> bool | None:
    """Decisive verdict when one side of the cut is a qubit, else ``None``."""
    if min(cut.sizes(G.dims)) != 2:
        return None
    return degree_criterion(G, cut).ppt


def axis_aligned_certificate(G: GridGraph, cut: Bipartition) -> bool:
    """True when every flattened edge keeps one side fixed, i.e. is a product vector."""
    F = flatten(G, cut)
    return all(i == k or j == l for (i, j), (k, l) in F.edges)


def ccnr_entangled(G: GridGraph, cut: Bipartition) -> tuple[float, bool]:
    """Realignment trace norm and whether it exceeds 1."""
    require_edges(G)
    value = trace_norm(realign(density(G), cut))
    return value, value > 1 + CCNR_TOL
