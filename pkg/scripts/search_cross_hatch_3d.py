"""Search the 3x3x3 grid for a symmetric, PPT, surgery-certified rank-13 graph.

Three experiments:

``symmetric``  every partition of the 27 vertices into 14 blocks that is the
               component partition of a graph fixed by all six party
               permutations; surgery outcomes depend only on this partition,
               so each is tested once for an all-empty surgery tree.
``cyclic``     perfect matchings of the 26 off-centre vertices fixed by the
               cyclic party shifts; keep those that are PPT on every cut and
               whose surgery trees end empty on every cut.
``residual``   numerical search for product vectors in the range of the
               catalog graph (alternating minimisation over kernel overlaps).

    python scripts/search_cross_hatch_3d.py symmetric
    python scripts/search_cross_hatch_3d.py cyclic
    python scripts/search_cross_hatch_3d.py residual --starts 50
"""

from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import dataclass

import numpy as np

from gridstates.catalog import gen_cross_hatch_3d
from gridstates.criteria import degree_criterion
from gridstates.graph import (
    GridGraph,
    all_cuts,
    all_possible_edges,
    canonical_edge,
    canonical_key,
    component_count,
    flatten,
    permute_parties,
    validate,
    viable_vertices,
)
from gridstates.spectral import kernel_basis
from gridstates.surgery import column_surgery, row_surgery

DIMS = (3, 3, 3)
VERTS = list(itertools.product(range(3), repeat=3))
INDEX = {v: i for i, v in enumerate(VERTS)}


@dataclass
class SearchConfig:
    experiment: str
    blocks: int = 14
    starts: int = 30
    iters: int = 300
    seed: int = 1


class EmptyTreeOracle:
    """Does some choice of viable vertex at every node lead only to empty graphs?"""

    def __init__(self, limit: int = 2_000_000):
        self.memo: dict[tuple, bool] = {}
        self.limit = limit

    def __call__(self, G: GridGraph) -> bool:
        key = canonical_key(G)
        if key in self.memo:
            return self.memo[key]
        if len(self.memo) > self.limit:
            self.memo.clear()
        if not G.edges:
            self.memo[key] = True
            return True
        self.memo[key] = False
        for v in sorted(viable_vertices(G)):
            if self(row_surgery(G, v)[0]) and self(column_surgery(G, v)[0]):
                self.memo[key] = True
                break
        return self.memo[key]


def edge_orbits(group):
    orbits = set()
    for u, v in all_possible_edges(DIMS):
        orbits.add(frozenset(canonical_edge(tuple(u[p] for p in g), tuple(v[p] for p in g)) for g in group))
    return sorted(orbits, key=sorted)


def _merge(labels, orbit):
    lab = list(labels)
    for u, v in orbit:
        a, b = lab[INDEX[u]], lab[INDEX[v]]
        if a != b:
            lo, hi = min(a, b), max(a, b)
            lab = [lo if x == hi else x for x in lab]
    return tuple(lab)


def symmetric_partitions(blocks: int):
    """Component partitions with ``blocks`` parts of graphs fixed by every party permutation."""
    orbits = edge_orbits(list(itertools.permutations(range(3))))
    start = tuple(range(len(VERTS)))
    seen, frontier, final = {start}, [start], set()
    while frontier:
        nxt = []
        for P in frontier:
            n = len(set(P))
            for orbit in orbits:
                Q = _merge(P, orbit)
                q = len(set(Q))
                if q == n or q < blocks or Q in seen:
                    continue
                seen.add(Q)
                (final.add if q == blocks else nxt.append)(Q)
        frontier = nxt
    return sorted(final)


def run_symmetric(cfg: SearchConfig) -> None:
    t0 = time.time()
    parts = symmetric_partitions(cfg.blocks)
    print(f"{len(parts)} symmetric partitions into {cfg.blocks} blocks ({time.time() - t0:.0f}s)")
    oracle = EmptyTreeOracle()
    cut = all_cuts(3)[0]
    hits = 0
    for labels in parts:
        groups: dict[int, list] = {}
        for v, lab in zip(VERTS, labels):
            groups.setdefault(lab, []).append(v)
        # any spanning forest of the blocks has the same surgery outcomes
        G = validate(DIMS, [(b[i], b[i + 1]) for b in groups.values() for i in range(len(b) - 1)])
        if oracle(flatten(G, cut)):
            hits += 1
            print("all-empty surgery tree:", labels)
    print(f"partitions with an all-empty surgery tree: {hits} ({time.time() - t0:.0f}s)")


def run_cyclic(cfg: SearchConfig) -> None:
    shifts = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    off_centre = [v for v in VERTS if v != (1, 1, 1)]
    orbits = [o for o in edge_orbits(shifts) if len({w for e in o for w in e}) == 2 * len(o)]
    orbits = [o for o in orbits if (1, 1, 1) not in {w for e in o for w in e}]
    by_vertex: dict[tuple, list] = {}
    for o in orbits:
        for w in {w for e in o for w in e}:
            by_vertex.setdefault(w, []).append(o)

    matchings = []

    def cover(left, chosen):
        if not left:
            matchings.append(list(chosen))
            return
        v = min(left)
        for o in by_vertex[v]:
            touched = {w for e in o for w in e}
            if touched <= left:
                chosen.append(o)
                cover(left - touched, chosen)
                chosen.pop()

    cover(set(off_centre), [])
    print(f"{len(matchings)} cyclically symmetric perfect matchings")
    oracle = EmptyTreeOracle()
    cuts = all_cuts(3)
    for sel in matchings:
        G = GridGraph(DIMS, frozenset().union(*sel))
        if not all(degree_criterion(G, c).ppt for c in cuts):
            continue
        if all(oracle(flatten(G, c)) for c in cuts):
            full = all(permute_parties(G, p) == G for p in itertools.permutations(range(3)))
            print(f"certified (components {component_count(G)}, full symmetry {full}):")
            print("  ", G.sorted_edges())


def product_residual(G: GridGraph, cut, starts: int, iters: int, seed: int) -> float:
    """Smallest overlap found between a product vector and the kernel; 0 means a product vector exists."""
    F = flatten(G, cut)
    m, n = F.dims
    K = np.array(kernel_basis(F), dtype=float).reshape(-1, m, n)
    rng = np.random.default_rng(seed)
    best = np.inf
    for _ in range(starts):
        psi = rng.normal(size=n) + 1j * rng.normal(size=n)
        psi /= np.linalg.norm(psi)
        for _ in range(iters):
            phi = np.linalg.svd(np.einsum("saj,j->sa", K, psi))[2][-1].conj()
            _, s, vh = np.linalg.svd(np.einsum("saj,a->sj", K, phi))
            psi = vh[-1].conj()
        best = min(best, s[-1] if len(s) == n else 0.0)
    return float(best)


def run_residual(cfg: SearchConfig) -> None:
    G = gen_cross_hatch_3d().graph
    for cut in all_cuts(3):
        r = product_residual(G, cut, cfg.starts, cfg.iters, cfg.seed)
        print(f"{cut}: min residual {r:.6f}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("experiment", choices=["symmetric", "cyclic", "residual"])
    parser.add_argument("--blocks", type=int, default=14)
    parser.add_argument("--starts", type=int, default=30)
    parser.add_argument("--iters", type=int, default=300)
    parser.add_argument("--seed", type=int, default=1)
    cfg = SearchConfig(**vars(parser.parse_args()))
    {"symmetric": run_symmetric, "cyclic": run_cyclic, "residual": run_residual}[cfg.experiment](cfg)


if __name__ == "__main__":
    main()
