"""Grid-labelled graphs.

A grid-labelled graph lives on the Cartesian product of the party index
ranges ``range(d0) x range(d1) x ...``.  Each edge ``{u, v}`` stands for the
pure state ``(|u> - |v>)/sqrt(2)`` and the graph as a whole for the uniform
mixture of these.  Vertices are tuples of 0-based coordinates; composite
(matrix) indices are row-major mixed radix over the parties.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Coord = tuple[int, ...]
Edge = tuple[Coord, Coord]


class GridError(ValueError):
    """Raised for malformed dimensions, coordinates, edges or cuts."""


class EmptyGraphError(GridError):
    """A state was requested from a graph without edges."""


def require_edges(G: "GridGraph") -> None:
    if not G.edges:
        raise EmptyGraphError("the empty graph does not define a state")


class UnionFind:
    """Disjoint sets over ``range(size)`` with path halving."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # keep the smaller root so representatives are stable
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.count -= 1
        return True


def check_dims(dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if len(dims) < 2:
        raise GridError(f"need at least two parties, got dims={list(dims)}")
    for p, d in enumerate(dims):
        if d < 2:
            raise GridError(f"party {p} has dimension {d} < 2")
    return dims


def check_coord(dims: Sequence[int], coord: Sequence[int]) -> Coord:
    coord = tuple(int(c) for c in coord)
    if len(coord) != len(dims):
        raise GridError(f"coordinate {coord} has {len(coord)} entries, expected {len(dims)}")
    for p, (c, d) in enumerate(zip(coord, dims)):
        if not 0 <= c < d:
            raise GridError(f"coordinate {coord}: entry {c} out of range for party {p} (dim {d})")
    return coord


def canonical_edge(u: Coord, v: Coord) -> Edge:
    if u == v:
        raise GridError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Bipartition:
    """Split of the parties ``0..N-1`` into a left and a right block.

    The blocks keep the order they were given in; :meth:`canonical` puts
    party 0 on the left.  Within a block parties are always sorted.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        left, right = tuple(sorted(set(self.left))), tuple(sorted(set(self.right)))
        if not left or not right:
            raise GridError("both sides of a cut must be non-empty")
        if set(left) & set(right):
            raise GridError(f"cut sides overlap: {left} | {right}")
        if set(left) | set(right) != set(range(len(left) + len(right))):
            raise GridError(f"cut {left} | {right} does not cover parties 0..{len(left) + len(right) - 1}")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def nparties(self) -> int:
        return len(self.left) + len(self.right)

    @classmethod
    def from_left(cls, left: Iterable[int], nparties: int) -> "Bipartition":
        left = tuple(left)
        return cls(left, tuple(p for p in range(nparties) if p not in left))

    @classmethod
    def parse(cls, text: str, nparties: int | None = None) -> "Bipartition":
        """Parse ``"0|1,2"``; the right side may be omitted when ``nparties`` is known."""
        try:
            lhs, _, rhs = text.partition("|")
            left = tuple(int(p) for p in lhs.split(",") if p.strip())
            right = tuple(int(p) for p in rhs.split(",") if p.strip())
        except ValueError as exc:
            raise GridError(f"malformed cut {text!r}") from exc
        if not right and nparties is not None:
            return cls.from_left(left, nparties)
        cut = cls(left, right)
        if nparties is not None and cut.nparties != nparties:
            raise GridError(f"cut {text!r} does not match {nparties} parties")
        return cut

    def canonical(self) -> "Bipartition":
        return self if 0 in self.left else Bipartition(self.right, self.left)

    def sizes(self, dims: Sequence[int]) -> tuple[int, int]:
        return (math.prod(dims[p] for p in self.left), math.prod(dims[p] for p in self.right))

    def __str__(self) -> str:
        return ",".join(map(str, self.left)) + "|" + ",".join(map(str, self.right))


def all_cuts(nparties: int) -> list[Bipartition]:
    """Every bipartition in canonical form (party 0 on the left)."""
    rest = range(1, nparties)
    cuts = []
    for k in range(0, nparties - 1):
        for extra in itertools.combinations(rest, k):
            cuts.append(Bipartition.from_left((0, *extra), nparties))
    return cuts


def standard_cut(nparties: int = 2) -> Bipartition:
    return Bipartition((0,), tuple(range(1, nparties)))


@dataclass(frozen=True)
class GridGraph:
    """Undirected simple graph on a labelled grid.

    Build through :func:`validate` (or :meth:`from_edges`) unless the edges are
    already canonical; equality is equality of ``(dims, edges)``.
    """

    dims: tuple[int, ...]
    edges: frozenset[Edge] = field(default_factory=frozenset)

    @classmethod
    def from_edges(cls, dims: Sequence[int], edges: Iterable[tuple[Sequence[int], Sequence[int]]] = ()) -> "GridGraph":
        return validate(dims, edges)

    @classmethod
    def empty(cls, dims: Sequence[int]) -> "GridGraph":
        return cls(check_dims(dims), frozenset())

    @property
    def nparties(self) -> int:
        return len(self.dims)

    @property
    def nvertices(self) -> int:
        return math.prod(self.dims)

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self) -> Iterator[Coord]:
        return itertools.product(*(range(d) for d in self.dims))

    def index(self, v: Coord) -> int:
        i = 0
        for c, d in zip(v, self.dims):
            i = i * d + c
        return i

    def coord(self, index: int) -> Coord:
        out = []
        for d in reversed(self.dims):
            index, c = divmod(index, d)
            out.append(c)
        return tuple(reversed(out))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def _degrees(self) -> dict[Coord, int]:
        deg: dict[Coord, int] = {}
        for u, v in self.edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        return deg

    def degree(self, v: Sequence[int]) -> int:
        return self._degrees.get(check_coord(self.dims, v), 0)

    def covered(self) -> set[Coord]:
        """Vertices of positive degree."""
        return set(self._degrees)

    def with_edges(self, add: Iterable[Edge] = (), remove: Iterable[Edge] = ()) -> "GridGraph":
        edges = set(self.edges)
        edges.difference_update(canonical_edge(*e) for e in remove)
        edges.update(canonical_edge(*e) for e in add)
        return GridGraph(self.dims, frozenset(edges))

    def __str__(self) -> str:
        shape = "x".join(map(str, self.dims))
        return f"GridGraph({shape}, {len(self.edges)} edges)"


def validate(dims: Sequence[int], raw_edges: Iterable[tuple[Sequence[int], Sequence[int]]] = ()) -> GridGraph:
    """Check raw input and build a :class:`GridGraph`; duplicate edges collapse."""
    dims = check_dims(dims)
    edges = set()
    for n, pair in enumerate(raw_edges):
        try:
            u, v = pair
        except (TypeError, ValueError) as exc:
            raise GridError(f"edge #{n} is not a pair of coordinates: {pair!r}") from exc
        u, v = check_coord(dims, u), check_coord(dims, v)
        if u == v:
            raise GridError(f"edge #{n} is a self-loop at {u}")
        edges.add(canonical_edge(u, v))
    return GridGraph(dims, frozenset(edges))


def degree(G: GridGraph, v: Sequence[int]) -> int:
    return G.degree(v)


def _union_find(G: GridGraph) -> UnionFind:
    uf = UnionFind(G.nvertices)
    for u, v in G.edges:
        uf.union(G.index(u), G.index(v))
    return uf


def connected_components(G: GridGraph) -> list[frozenset[Coord]]:
    """All components, isolated vertices included, ordered by smallest vertex."""
    uf = _union_find(G)
    groups: dict[int, list[Coord]] = {}
    for i, v in enumerate(G.vertices()):
        groups.setdefault(uf.find(i), []).append(v)
    return [frozenset(g) for g in groups.values()]


def component_count(G: GridGraph) -> int:
    return _union_find(G).count


def isolated_vertices(G: GridGraph) -> set[Coord]:
    covered = G.covered()
    return {v for v in G.vertices() if v not in covered}


def _require_bipartite(G: GridGraph) -> None:
    if G.nparties != 2:
        raise GridError(f"expected a two-party graph, got {G.nparties} parties (flatten first)")


def viable_vertices(G: GridGraph) -> set[Coord]:
    """Isolated vertices sitting on a non-isolated row and a non-isolated column."""
    _require_bipartite(G)
    covered = G.covered()
    rows = {i for i, _ in covered}
    cols = {j for _, j in covered}
    return {(i, j) for i in rows for j in cols if (i, j) not in covered}


def grid_rank(G: GridGraph) -> int:
    """Rank of the grid state: vertex count minus component count."""
    return G.nvertices - component_count(G)


def flatten_coord(dims: Sequence[int], cut: Bipartition, v: Coord) -> Coord:
    a = b = 0
    for p in cut.left:
        a = a * dims[p] + v[p]
    for p in cut.right:
        b = b * dims[p] + v[p]
    return (a, b)


def flatten(G: GridGraph, cut: Bipartition) -> GridGraph:
    """Merge each block of ``cut`` into one composite party (mixed radix, ascending parties)."""
    if cut.nparties != G.nparties:
        raise GridError(f"cut {cut} does not match a {G.nparties}-party graph")
    if cut.left == (0,) and cut.right == (1,):
        return G
    dims = cut.sizes(G.dims)
    edges = frozenset(
        canonical_edge(flatten_coord(G.dims, cut, u), flatten_coord(G.dims, cut, v)) for u, v in G.edges
    )
    return GridGraph(dims, edges)


def canonical_key(G: GridGraph) -> tuple:
    return (G.dims, tuple(sorted(G.edges)))


def transpose(G: GridGraph) -> GridGraph:
    """Swap the two parties of a bipartite graph."""
    _require_bipartite(G)
    return GridGraph(
        (G.dims[1], G.dims[0]),
        frozenset(canonical_edge((u[1], u[0]), (v[1], v[0])) for u, v in G.edges),
    )


def permute_parties(G: GridGraph, perm: Sequence[int]) -> GridGraph:
    """Relabel parties: new party ``q`` is old party ``perm[q]``."""
    if sorted(perm) != list(range(G.nparties)):
        raise GridError(f"{perm} is not a permutation of the parties")
    dims = tuple(G.dims[p] for p in perm)
    edges = frozenset(canonical_edge(tuple(u[p] for p in perm), tuple(v[p] for p in perm)) for u, v in G.edges)
    return GridGraph(dims, edges)


def all_possible_edges(dims: Sequence[int]) -> list[Edge]:
    """Every vertex pair, in lexicographic order."""
    verts = list(itertools.product(*(range(d) for d in dims)))
    return list(itertools.combinations(verts, 2))
