import math

import pytest

from gridstates.census import COLUMNS, CensusConfig, format_table, run_census, totals
from gridstates.graph import GridError


def test_2x2_rows():
    rows = run_census(CensusConfig((2, 2), 2))
    assert [r["total"] for r in rows] == [1, 6, 15]
    # two horizontal and two vertical single edges, two diagonals
    assert (rows[1]["separable"], rows[1]["npt"]) == (4, 2)
    assert rows[0]["empty"] == 1


def test_every_graph_lands_in_one_bucket():
    rows = run_census(CensusConfig((2, 3), 3))
    for r in rows:
        assert r["total"] == sum(r[c] for c in COLUMNS[2:])
    assert totals(rows)["total"] == sum(math.comb(15, k) for k in range(4))
    # 2 x q: the degree criterion decides everything
    assert totals(rows)["undecided"] == totals(rows)["bound"] == 0


def test_jobs_do_not_change_counts():
    cfg = dict(dims=(2, 3), max_edges=3)
    assert run_census(CensusConfig(jobs=1, **cfg)) == run_census(CensusConfig(jobs=3, **cfg))


def test_table_format():
    text = format_table(run_census(CensusConfig((2, 2), 1)))
    assert text.splitlines() == [
        ",".join(COLUMNS),
        "0,1,0,0,0,0,1",
        "1,6,4,2,0,0,0",
        "all,7,4,2,0,0,1",
    ]


@pytest.mark.parametrize("kwargs", [dict(dims=(2, 2, 2), max_edges=1), dict(dims=(2, 2), max_edges=-1),
                                    dict(dims=(2, 2), max_edges=1, jobs=0), dict(dims=(1, 2), max_edges=1)])
def test_config_errors(kwargs):
    with pytest.raises(GridError):
        CensusConfig(**kwargs)
