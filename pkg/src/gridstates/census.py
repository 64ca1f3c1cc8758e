"""Classification counts over every small graph on a bipartite grid."""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .catalog import count_graphs
from .classify import Label, classify
from .graph import GridError, GridGraph, all_possible_edges, check_dims

COLUMNS = ("edge_count", "total", "separable", "npt", "bound", "undecided", "empty")

_BUCKET = {
    Label.SEPARABLE: "separable",
    Label.NPT_ENTANGLED: "npt",
    Label.BOUND_ENTANGLED: "bound",
    Label.PPT_UNDECIDED: "undecided",
}


@dataclass(frozen=True)
class CensusConfig:
    dims: tuple[int, int]
    max_edges: int
    jobs: int = 1

    def __post_init__(self):
        dims = check_dims(self.dims)
        if len(dims) != 2:
            raise GridError(f"census runs on two-party grids, got dims {list(dims)}")
        if self.max_edges < 0:
            raise GridError(f"max_edges must be >= 0, got {self.max_edges}")
        if self.jobs < 1:
            raise GridError(f"jobs must be >= 1, got {self.jobs}")
        object.__setattr__(self, "dims", dims)


def _shard(args) -> Counter:
    dims, max_edges, start, stop = args
    counts: Counter = Counter()
    pool = all_possible_edges(dims)
    combos = itertools.chain.from_iterable(itertools.combinations(pool, k) for k in range(max_edges + 1))
    # same order as enumerate_graphs, skipping without building graphs
    for combo in itertools.islice(combos, start, stop):
        G = GridGraph(dims, frozenset(combo))
        k = len(combo)
        counts[(k, "total")] += 1
        if not G.edges:
            counts[(k, "empty")] += 1
            continue
        counts[(k, _BUCKET[classify(G).label])] += 1
    return counts


def run_census(cfg: CensusConfig) -> list[dict[str, int]]:
    """One row per edge count; the same numbers for any ``jobs``."""
    total = count_graphs(cfg.dims, cfg.max_edges)
    nshards = cfg.jobs * 4 if cfg.jobs > 1 else 1
    bounds = [total * s // nshards for s in range(nshards + 1)]
    tasks = [(cfg.dims, cfg.max_edges, a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
    counts: Counter = Counter()
    if cfg.jobs == 1:
        for t in tasks:
            counts.update(_shard(t))
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            for part in pool.map(_shard, tasks):
                counts.update(part)
    rows = []
    for k in range(cfg.max_edges + 1):
        row = {"edge_count": k}
        row.update({c: counts.get((k, c), 0) for c in COLUMNS[1:]})
        rows.append(row)
    return rows


def totals(rows: list[dict[str, int]]) -> dict[str, int]:
    return {c: sum(r[c] for r in rows) for c in COLUMNS[1:]}


def format_table(rows: list[dict[str, int]]) -> str:
    """CSV with one line per edge count and a closing ``all`` line."""
    lines = [",".join(COLUMNS)]
    lines += [",".join(str(r[c]) for c in COLUMNS) for r in rows]
    summary = totals(rows)
    lines.append(",".join(["all"] + [str(summary[c]) for c in COLUMNS[1:]]))
    return "\n".join(lines)
