"""Row/column surgery and the range-criterion verdicts built on it.

For an isolated vertex ``(i, j)`` every product vector in the range of
rho(G) also lies in the range of the row-surgery graph or of the
column-surgery graph.  Iterating surgery at viable vertices until none are
left gives a finite set of terminal graphs whose ranks bound the dimension
spanned by the product vectors in the original range.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from .criteria import PptReport, degree_criterion
from .graph import (
    require_edges,
    Bipartition,
    Coord,
    Edge,
    GridError,
    GridGraph,
    UnionFind,
    all_cuts,
    canonical_edge,
    canonical_key,
    flatten,
    grid_rank,
    transpose,
    viable_vertices,
)

Axis = Literal["row", "column"]


@dataclass(frozen=True)
class SurgeryStep:
    axis: Axis
    vertex: Coord
    removed_edges: frozenset[Edge]
    stitched_edges: frozenset[Edge]


def _require_isolated(G: GridGraph, v: Coord) -> Coord:
    if G.nparties != 2:
        raise GridError("surgery needs a two-party graph; flatten first")
    v = tuple(v)
    if len(v) != 2 or not (0 <= v[0] < G.dims[0] and 0 <= v[1] < G.dims[1]):
        raise GridError(f"vertex {v} is not on the {G.dims[0]}x{G.dims[1]} grid")
    if v in G.covered():
        raise GridError(f"vertex {v} is not isolated")
    return v


def _row_surgery(G: GridGraph, row: int, stitch: Sequence[Edge]) -> tuple[frozenset[Edge], frozenset[Edge]]:
    removed = frozenset(e for e in G.edges if e[0][0] == row or e[1][0] == row)
    if not removed:
        return removed, frozenset()
    kept = G.edges - removed
    before, after = UnionFind(G.nvertices), UnionFind(G.nvertices)
    for u, v in G.edges:
        before.union(G.index(u), G.index(v))
    for u, v in kept:
        after.union(G.index(u), G.index(v))

    # off-row fragments of each original component that touched the cut row
    touched = {before.find(G.index(v)) for e in removed for v in e}
    fragments: dict[int, dict[int, Coord]] = {}
    for idx, v in enumerate(G.vertices()):
        if v[0] == row:
            continue
        comp = before.find(idx)
        if comp not in touched:
            continue
        frag = after.find(idx)
        reps = fragments.setdefault(comp, {})
        if frag not in reps or v < reps[frag]:
            reps[frag] = v

    stitched = set()
    for comp, reps in fragments.items():
        if len(reps) < 2:
            continue
        merge = UnionFind(G.nvertices)
        for u, v in stitch:
            if u[0] == row or v[0] == row:
                continue
            iu, iv = G.index(u), G.index(v)
            if before.find(iu) != comp or before.find(iv) != comp:
                continue
            fu, fv = after.find(iu), after.find(iv)
            if merge.union(fu, fv):
                stitched.add(canonical_edge(u, v))
        groups: dict[int, Coord] = {}
        for frag, rep in reps.items():
            g = merge.find(frag)
            if g not in groups or rep < groups[g]:
                groups[g] = rep
        chain = sorted(groups.values())
        stitched.update(canonical_edge(a, b) for a, b in zip(chain, chain[1:]))
    return removed, frozenset(stitched)


def row_surgery(G: GridGraph, v: Coord, stitch: Sequence[Edge] = ()) -> tuple[GridGraph, SurgeryStep]:
    """CUT every edge touching row ``v[0]``, then STITCH broken components back together.

    Fragments of a component are reconnected first with any applicable edges
    from ``stitch`` (in order), then by chaining the remaining fragments
    through their lexicographically smallest vertices.
    """
    v = _require_isolated(G, v)
    stitch = [canonical_edge(tuple(a), tuple(b)) for a, b in stitch]
    removed, stitched = _row_surgery(G, v[0], stitch)
    out = GridGraph(G.dims, (G.edges - removed) | stitched)
    return out, SurgeryStep("row", v, removed, stitched)


def _swap(e: Edge) -> Edge:
    (a, b), (c, d) = e
    return canonical_edge((b, a), (d, c))


def column_surgery(G: GridGraph, v: Coord, stitch: Sequence[Edge] = ()) -> tuple[GridGraph, SurgeryStep]:
    """Row surgery on the transposed grid."""
    v = _require_isolated(G, v)
    T = transpose(G)
    stitch_t = [_swap(canonical_edge(tuple(a), tuple(b))) for a, b in stitch]
    removed, stitched = _row_surgery(T, v[1], stitch_t)
    removed = frozenset(_swap(e) for e in removed)
    stitched = frozenset(_swap(e) for e in stitched)
    out = GridGraph(G.dims, (G.edges - removed) | stitched)
    return out, SurgeryStep("column", v, removed, stitched)


@dataclass
class TraceNode:
    graph: GridGraph
    depth: int
    children: list[tuple[SurgeryStep, tuple]] = field(default_factory=list)

    @property
    def terminal(self) -> bool:
        return not self.children


@dataclass
class SurgeryTrace:
    """Exploration record; graphs reached along several branches share one node."""

    root: tuple
    nodes: dict[tuple, TraceNode]

    def terminal_keys(self) -> list[tuple]:
        return sorted(k for k, n in self.nodes.items() if n.terminal)

    def min_depth(self, G: GridGraph) -> int | None:
        node = self.nodes.get(canonical_key(G))
        return None if node is None else node.depth

    def render(self, max_lines: int | None = None) -> str:
        """Indented tree; shared subtrees are printed once and referenced afterwards."""
        names = {k: f"g{n}" for n, k in enumerate(sorted(self.nodes, key=lambda k: (self.nodes[k].depth, k)))}
        lines: list[str] = []
        seen: set[tuple] = set()

        def describe(key):
            node = self.nodes[key]
            tag = " [terminal]" if node.terminal else ""
            return f"{names[key]}: {len(node.graph.edges)} edges, rank {grid_rank(node.graph)}{tag}"

        stack = [(self.root, 0, None)]
        while stack:
            key, indent, step = stack.pop()
            prefix = "  " * indent
            if step is not None:
                extra = ""
                if step.stitched_edges:
                    extra = " stitch " + ", ".join(f"{a}-{b}" for a, b in sorted(step.stitched_edges))
                prefix += f"{step.axis} {step.vertex}{extra} -> "
            if key in seen:
                lines.append(prefix + f"{names[key]} (see above)")
                continue
            seen.add(key)
            lines.append(prefix + describe(key))
            for child_step, child in reversed(self.nodes[key].children):
                stack.append((child, indent + 1, child_step))
            if max_lines is not None and len(lines) >= max_lines:
                lines.append("...")
                break
        return "\n".join(lines)


@dataclass(frozen=True)
class TerminalSet:
    terminals: tuple[GridGraph, ...]
    ranks: dict[tuple, int]

    def __contains__(self, G: GridGraph) -> bool:
        return canonical_key(G) in self.ranks

    def __len__(self) -> int:
        return len(self.terminals)

    def __iter__(self):
        return iter(self.terminals)


def surgery_terminals(
    G: GridGraph, exhaustive: bool = False, stitch: Sequence[Edge] = ()
) -> tuple[TerminalSet, SurgeryTrace]:
    """Explore row/column surgeries until no viable vertex is left.

    By default the lexicographically smallest viable vertex is branched on.
    With ``exhaustive`` every viable vertex is tried at every graph and the
    one whose subtree gives the smallest span bound is kept; since any
    single vertex yields a valid split, the result is the strongest bound
    surgery can give.  Graphs are deduplicated by exact edge set and the
    kept tree is walked breadth first, so each node records the fewest
    surgeries needed to reach it.
    """
    if G.nparties != 2:
        raise GridError("surgery needs a two-party graph; flatten first")
    stitch = tuple(stitch)
    choice = _best_vertices(G, stitch) if exhaustive else None
    root = canonical_key(G)
    nodes = {root: TraceNode(G, 0)}
    queue = deque([root])
    while queue:
        key = queue.popleft()
        node = nodes[key]
        if choice is not None:
            v = choice.get(key)
        else:
            viable = viable_vertices(node.graph)
            v = min(viable) if viable else None
        if v is None:
            continue
        for op in (row_surgery, column_surgery):
            child, step = op(node.graph, v, stitch)
            ckey = canonical_key(child)
            if ckey not in nodes:
                nodes[ckey] = TraceNode(child, node.depth + 1)
                queue.append(ckey)
            node.children.append((step, ckey))
    trace = SurgeryTrace(root, nodes)
    keys = trace.terminal_keys()
    terminals = tuple(nodes[k].graph for k in keys)
    return TerminalSet(terminals, {k: grid_rank(nodes[k].graph) for k in keys}), trace


def _best_vertices(G: GridGraph, stitch: tuple[Edge, ...]) -> dict[tuple, Coord]:
    """Branch vertex per reachable graph minimising the terminal rank sum below it."""
    best: dict[tuple, tuple[int, frozenset]] = {}
    choice: dict[tuple, Coord] = {}
    graphs = {canonical_key(G): G}

    def solve(key):
        if key in best:
            return best[key]
        H = graphs[key]
        viable = sorted(viable_vertices(H))
        if not viable:
            best[key] = (grid_rank(H), frozenset([key]))
            return best[key]
        top = None
        for v in viable:
            found = frozenset()
            for op in (row_surgery, column_surgery):
                child, _ = op(H, v, stitch)
                ckey = canonical_key(child)
                graphs.setdefault(ckey, child)
                found |= solve(ckey)[1]
            bound = sum(grid_rank(graphs[k]) for k in found)
            if top is None or bound < top[0]:
                top = (bound, found, v)
                if bound == 0:
                    break
        best[key] = top[:2]
        choice[key] = top[2]
        return best[key]

    solve(canonical_key(G))
    return choice


def product_span_bound(T: TerminalSet) -> int:
    """Upper bound on the dimension spanned by product vectors in the root range."""
    return sum(T.ranks.values())


@dataclass(frozen=True)
class RangeVerdict:
    cut: Bipartition
    root_rank: int
    span_bound: int
    entangled: bool
    no_product_vectors: bool


def range_verdict(
    G: GridGraph, cut: Bipartition, exhaustive: bool = False, stitch: Sequence[Edge] = ()
) -> RangeVerdict:
    require_edges(G)
    F = flatten(G, cut)
    terminals, _ = surgery_terminals(F, exhaustive=exhaustive, stitch=stitch)
    bound = product_span_bound(terminals)
    rank = grid_rank(F)
    return RangeVerdict(cut, rank, bound, bound < rank, bound == 0)


@dataclass(frozen=True)
class GmeReport:
    ppt: tuple[PptReport, ...]
    ranges: tuple[RangeVerdict, ...]
    gme: bool

    @property
    def entangled_across(self) -> dict[str, bool]:
        """Per-cut entanglement flags; these alone do not imply GME."""
        return {str(r.cut): r.entangled for r in self.ranges}


def gme_verdict(G: GridGraph, exhaustive: bool = False, cuts: Iterable[Bipartition] | None = None) -> GmeReport:
    """GME holds when no cut admits a product vector in the range."""
    if G.nparties < 3:
        raise GridError("genuine multipartite entanglement needs at least three parties")
    require_edges(G)
    cuts = list(cuts) if cuts is not None else all_cuts(G.nparties)
    ppt = tuple(degree_criterion(G, c) for c in cuts)
    ranges = tuple(range_verdict(G, c, exhaustive=exhaustive) for c in cuts)
    return GmeReport(ppt, ranges, all(r.no_product_vectors for r in ranges))
