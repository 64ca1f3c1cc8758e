import io
import json
import subprocess
import sys

import pytest

from gridstates.cli import EXIT_EMPTY, EXIT_INVALID, EXIT_OK, main
from gridstates.formats import parse_graph, serialize_graph
from gridstates.catalog import gen_cross_hatch, gen_fig1b, gen_square_loop


def run(argv, stdin=b"", capsys=None, monkeypatch=None):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin)))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin=b"": run(argv, stdin, capsys, monkeypatch)


@pytest.fixture
def graph_file(tmp_path):
    def write(G, name="g.json"):
        path = tmp_path / name
        path.write_bytes(serialize_graph(G))
        return str(path)

    return write


def test_gen_then_classify(cli):
    code, out, _ = cli(["gen", "cross-hatch", "3", "3"])
    assert code == EXIT_OK
    code, out, _ = cli(["classify"], stdin=out.encode())
    assert code == EXIT_OK and out.startswith("label: BOUND_ENTANGLED")


def test_classify_json(cli, graph_file):
    code, out, _ = cli(["classify", "--json", graph_file(gen_cross_hatch().graph)])
    doc = json.loads(out)
    assert out.count("\n") == 1
    assert set(doc) == {"label", "cuts", "ccnr", "range", "gme", "certificates"}
    assert doc["label"] == "BOUND_ENTANGLED"


def test_ppt_witness(cli, graph_file):
    code, out, _ = cli(["ppt", graph_file(gen_fig1b().graph)])
    assert code == EXIT_OK and out.strip() == "0|1: NPT witness (1, 0)"


def test_ppt_single_cut(cli):
    _, data, _ = cli(["gen", "cross-hatch-3d"])
    code, out, _ = cli(["ppt", "--cut", "1|0,2", "-"], stdin=data.encode())
    assert out.strip() == "1|0,2: PPT"


def test_surgery_with_stitch(cli, graph_file):
    stitch = "[[[0,4],[3,1]],[[0,4],[4,0]]]"
    code, out, _ = cli(["surgery", "--stitch", stitch, "--trace", graph_file(gen_square_loop().graph)])
    assert code == EXIT_OK
    assert "span bound 2" in out
    assert "stitch (0, 4)-(3, 1)" in out and "stitch (0, 4)-(4, 0)" in out


def test_surgery_exhaustive_tripartite(cli):
    _, data, _ = cli(["gen", "cross-hatch-3d"])
    code, out, _ = cli(["surgery", "--exhaustive"], stdin=data.encode())
    assert out.count("span bound 0") == 3


def test_rank_and_ccnr(cli, graph_file):
    path = graph_file(gen_square_loop().graph)
    assert cli(["rank", path])[1].strip() == "rank 14, components 11"
    code, out, _ = cli(["ccnr", graph_file(gen_cross_hatch().graph)])
    assert out.startswith("0|1: 1.1401") and out.strip().endswith("entangled")


def test_gen_to_file(cli, tmp_path):
    target = tmp_path / "sq.json"
    assert cli(["gen", "square-loop", "-o", str(target)])[0] == EXIT_OK
    assert parse_graph(target.read_bytes()) == gen_square_loop().graph


def test_census_small(cli):
    code, out, _ = cli(["census", "--dims", "2x2", "--max-edges", "2"])
    lines = out.strip().splitlines()
    assert lines[0] == "edge_count,total,separable,npt,bound,undecided,empty"
    assert lines[-1].split(",")[:2] == ["all", "22"]


def test_export_dot(cli, graph_file):
    code, out, _ = cli(["export-dot", graph_file(gen_square_loop().graph)])
    assert code == EXIT_OK and out.count(" -- ") == 14


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["classify"], b"not json"),
        (["rank"], b'{"dims":[3,3],"edges":[[[0,0],[3,0]]]}'),
        (["ppt", "--cut", "0|5"], b'{"dims":[2,2],"edges":[]}'),
        (["gen", "nonsense"], b""),
        (["gen", "cross-hatch", "2", "2"], b""),
        (["gen", "cross-hatch", "x"], b""),
        (["census", "--dims", "3x3x3", "--max-edges", "1"], b""),
        (["census", "--dims", "axb", "--max-edges", "1"], b""),
        (["surgery", "--stitch", "[[1]]"], b'{"dims":[2,2],"edges":[]}'),
        (["rank", "/nonexistent/file.json"], b""),
    ],
)
def test_invalid_input_exit_code(cli, argv, stdin):
    code, out, err = cli(argv, stdin)
    assert code == EXIT_INVALID and err.startswith("error:")


@pytest.mark.parametrize("command", ["classify", "ccnr"])
def test_empty_graph_exit_code(cli, command):
    code, _, err = cli([command], b'{"dims":[3,3,3],"edges":[]}')
    assert code == EXIT_EMPTY and "empty graph" in err


def test_empty_graph_fine_for_structure(cli):
    code, out, _ = cli(["rank"], b'{"dims":[3,3,3],"edges":[]}')
    assert code == EXIT_OK and out.strip() == "rank 0, components 27"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gridstates", "gen", "fig1a"], capture_output=True, check=True
    )
    assert parse_graph(proc.stdout).dims == (2, 2)
