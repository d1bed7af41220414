import json
import subprocess
import sys

import pytest

from conftest import GOLDEN, GRAPHS, graph_files
from graph_ideal.cli import main
from graph_ideal.corpus import connected_bipartite_graphs, random_corpus, relabel
from graph_ideal.graph import connected_components, is_bipartite
from graph_ideal.report import dumps


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


@pytest.mark.parametrize("path", graph_files(), ids=lambda p: p.stem)
def test_golden_reports(path, capsys):
    code, out = run(["invariants", str(path)], capsys)
    assert code == 0
    assert out.out == (GOLDEN / f"{path.stem}.json").read_text()


def test_report_values(capsys):
    code, out = run(["invariants", str(GRAPHS / "c4.json")], capsys)
    r = json.loads(out.out)
    assert (r["degree"], r["reg"], r["mu"]) == (4, 2, 2)
    assert list(r) == ["graph", "p", "degree", "hf", "reg", "regArtinian", "mu", "phi",
                       "epsilon", "verdicts"]
    r = json.loads(run(["invariants", str(GRAPHS / "k23.json")], capsys)[1].out)
    assert r["reg"] == 3 == r["mu"]


def test_check_verdicts(capsys):
    code, out = run(["check", str(GRAPHS / "k3.json")], capsys)
    verdicts = {v["theoremId"]: v for v in json.loads(out.out)}
    assert code == 0
    assert verdicts["lowerBound"]["status"] == "pass"
    assert verdicts["lowerBound"]["details"]["mu"] == 1
    assert verdicts["upperBound"]["details"]["bound"] == 3
    assert verdicts["bipartiteEquality"]["status"] == "skipped"
    code, out = run(["check", str(GRAPHS / "forest6.txt")], capsys)
    assert code == 0
    assert all(v["status"] != "fail" for v in json.loads(out.out))


def test_corpus_dir_matches_goldens(capsys):
    code, out = run(["corpus", "--dir", str(GRAPHS)], capsys)
    doc = json.loads(out.out)
    assert code == 0 and doc["failed"] == 0 and doc["total"] == len(graph_files())
    for record in doc["graphs"]:
        assert dumps(record["report"]) == (GOLDEN / f"{record['id']}.json").read_text()


def test_corpus_random_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["corpus", "--random", "6", "--max-edges", "6", "--seed", "3"]
    assert main(args + ["--json", str(a)]) == 0
    assert main(args + ["--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["passed"] == 6


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "loop.txt"
    bad.write_text("1 1\n")
    assert run(["invariants", str(bad)], capsys)[0] == 2
    assert run(["invariants", str(tmp_path / "missing.json")], capsys)[0] == 2
    assert run(["invariants", str(GRAPHS / "c4.json"), "--field", "4"], capsys)[0] == 2
    assert run(["ideal", str(GRAPHS / "c6.json"), "--cap-pairs", "2"], capsys)[0] == 3
    assert run(["ears", str(GRAPHS / "bridged_triangles.json")], capsys)[0] == 2


def test_ideal_with_t_order(capsys):
    code, out = run(["ideal", str(GRAPHS / "bridged_triangles.json"), "--t-order",
                     "12>23>13>34>45>56>46"], capsys)
    doc = json.loads(out.out)
    assert code == 0 and len(doc["elements"]) == 16
    assert doc["variables"][:3] == ["t1_2", "t2_3", "t1_3"]
    code, out = run(["ideal", str(GRAPHS / "c4.json"), "--t-order", "t1_2>t2_3>t3_4>t1_4",
                     "--field", "5"], capsys)
    assert code == 0 and json.loads(out.out)["characteristic"] == 5


def test_mu_and_ears(capsys):
    doc = json.loads(run(["mu", str(GRAPHS / "bridged_triangles.json")], capsys)[1].out)
    assert doc["mu"] == 3 and len(doc["join"]) == 3
    doc = json.loads(run(["ears", str(GRAPHS / "k33_minus_edge.json"), "--nested", "--phi"],
                         capsys)[1].out)
    assert doc["phi"] == 1 and doc["nested"] is None
    doc = json.loads(run(["ears", str(GRAPHS / "theta.json"), "--nested"], capsys)[1].out)
    assert doc["epsilon"] == 1 and doc["nested"]["ears"][1]["host"] >= 1


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "graph_ideal", "mu", str(GRAPHS / "c4.json")],
                         capture_output=True, text=True, env={"GRAPH_IDEAL_LOG": "info",
                                                             "PATH": ""})
    assert out.returncode == 0 and json.loads(out.stdout)["mu"] == 2


def test_random_corpus_quota():
    entries = random_corpus(20, 8, seed=1)
    assert [is_bipartite(e.graph).flag for e in entries] == [i % 2 == 0 for i in range(20)]
    assert all(e.graph.num_edges <= 8 for e in entries)
    assert all(e.connected == (connected_components(e.graph)[0] == 1) for e in entries)
    assert random_corpus(20, 8, seed=1) == entries


def test_bipartite_generator_complete():
    """Matches the connected bipartite graphs with at most 6 edges in the
    networkx atlas of all graphs on up to 7 vertices, class for class."""
    import networkx as nx
    reps = connected_bipartite_graphs(6)
    atlas = [h for h in nx.graph_atlas_g()
             if 1 <= h.number_of_edges() <= 6 and nx.is_connected(h) and nx.is_bipartite(h)]
    assert len(reps) == len(atlas)
    for h in atlas:
        assert sum(nx.is_isomorphic(h, nx.Graph(list(r.edges))) for r in reps) == 1
