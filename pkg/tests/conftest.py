import itertools
import sys

import numpy as np
from hypothesis import strategies as st

from gridstates.catalog import all_possible_edges
from gridstates.graph import GridGraph


@st.composite
def grid_graphs(draw, dims=None, max_edges=6, min_edges=0):
    if dims is None:
        dims = draw(st.sampled_from([(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (3, 4), (4, 4)]))
    pool = all_possible_edges(dims)
    idx = draw(st.sets(st.integers(0, len(pool) - 1), min_size=min_edges, max_size=min(max_edges, len(pool))))
    return GridGraph(tuple(dims), frozenset(pool[i] for i in idx))


def tripartite_graphs(max_edges=6, min_edges=0):
    return grid_graphs(dims=(2, 2, 3), max_edges=max_edges, min_edges=min_edges) | grid_graphs(
        dims=(2, 3, 2), max_edges=max_edges, min_edges=min_edges
    )


def basis_vector(G, v):
    out = np.zeros(G.nvertices)
    out[G.index(v)] = 1.0
    return out


def axis_aligned_edges(dims):
    return [
        (u, v)
        for u, v in itertools.combinations(itertools.product(*(range(d) for d in dims)), 2)
        if sum(a != b for a, b in zip(u, v)) == 1
    ]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
