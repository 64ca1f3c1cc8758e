"""Time the classification census on small grids and write the tables as CSV.

    python scripts/run_census.py --dims 3x3 --max-edges 3 --jobs 1 8 --out results/
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from gridstates.census import CensusConfig, format_table, run_census


@dataclass
class CensusRun:
    dims: tuple[int, int] = (3, 3)
    max_edges: int = 3
    jobs: list[int] = field(default_factory=lambda: [1])
    out: Path | None = None


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", default="3x3")
    parser.add_argument("--max-edges", type=int, default=3)
    parser.add_argument("--jobs", type=int, nargs="+", default=[1])
    parser.add_argument("--out", type=Path)
    args = parser.parse_args()
    run = CensusRun(tuple(int(d) for d in args.dims.split("x")), args.max_edges, args.jobs, args.out)

    tables = {}
    for jobs in run.jobs:
        t0 = time.perf_counter()
        rows = run_census(CensusConfig(run.dims, run.max_edges, jobs))
        elapsed = time.perf_counter() - t0
        tables[jobs] = format_table(rows)
        print(f"--jobs {jobs}: {elapsed:.2f}s")
    first = next(iter(tables.values()))
    print(first)
    print("identical across job counts:", all(t == first for t in tables.values()))
    if run.out:
        run.out.mkdir(parents=True, exist_ok=True)
        name = f"census_{run.dims[0]}x{run.dims[1]}_k{run.max_edges}.csv"
        (run.out / name).write_text(first + "\n")


if __name__ == "__main__":
    main()
