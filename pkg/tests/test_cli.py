import json

import pytest

from spiderfree.cli import main
from spiderfree.generators import complete, cycle, petersen
from spiderfree.graph import disjoint_union, write_graph

PHI = "p cnf 2 3\n1 2 0\n1 -2 0\n2 -1 0\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in {"tri": disjoint_union(cycle(3), cycle(3)).add_edges([(0, 3)]),
                    "two": disjoint_union(cycle(3), cycle(3)), "k4": complete(4),
                    "pet": petersen()}.items():
        path = tmp_path / f"{name}.txt"
        write_graph(g, path)
        out[name] = str(path)
    (tmp_path / "phi.cnf").write_text(PHI)
    out["cnf"] = str(tmp_path / "phi.cnf")
    out["dir"] = tmp_path
    return out


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_solve_fvs_json(files, capsys):
    code, out = run(capsys, "solve", "fvs", files["tri"], "--json")
    rep = json.loads(out.out)
    assert code == 0 and rep["problem"] == "fvs" and rep["value"] == 2
    assert json.dumps(rep, sort_keys=True) == out.out.strip()


def test_solve_decision_no(files, capsys):
    code, _ = run(capsys, "solve", "fvs", files["tri"], "--k", "1")
    assert code == 1


def test_matchingcut_disconnected_is_exit_2(files, capsys):
    code, out = run(capsys, "solve", "matchingcut", files["two"], "--json")
    err = json.loads(out.out)
    assert code == 2 and err["exit_code"] == 2 and "connected" in err["message"]


def test_capacity_exit_3(files, capsys):
    code, out = run(capsys, "oracle", "cvc", files["pet"], "--subset-cap", "5", "--json")
    assert code == 3 and json.loads(out.out)["error"] == "capacity"


def test_subcubic_ifvs(files, capsys):
    code, out = run(capsys, "solve", "ifvs", files["k4"], "--subcubic")
    assert code == 1 and "NO-IFVS(K4)" in out.out
    code, out = run(capsys, "solve", "ifvs", files["pet"], "--subcubic")
    assert code == 0 and "degree3Only: true" in out.out


def test_check_spider(files, capsys):
    assert run(capsys, "check", files["pet"], "--spider", "1,1,1,1")[0] == 0
    write_graph(complete(5), files["dir"] / "k5.txt")
    code, out = run(capsys, "check", str(files["dir"] / "k5.txt"), "--spider", "1,1,1,1", "--json")
    assert code == 1 and json.loads(out.out)["free"] is False


def test_reduce_and_check(files, capsys):
    graph = str(files["dir"] / "red.txt")
    code, _ = run(capsys, "reduce", files["cnf"], "-o", graph)
    assert code == 0
    side = json.loads((files["dir"] / "red.txt.json").read_text())
    assert side["threshold"] == 8 and len(side["literal_map"]) == 6
    code, out = run(capsys, "check", graph, "--spider", "2,2,2,2")
    assert code == 0 and out.out.strip() == "FREE"


def test_verify_reduction(files, capsys):
    code, out = run(capsys, "verify-reduction", files["cnf"], "--json")
    assert code == 0 and json.loads(out.out)["ok"] is True


def test_gen_is_deterministic(files, capsys):
    a = run(capsys, "gen", "composite", "14", "--seed", "7", "--json")[1].out
    b = run(capsys, "gen", "composite", "14", "--seed", "7", "--json")[1].out
    assert a == b and json.loads(a)["n"] <= 14


def test_gen_writes_file_and_dot(files, capsys):
    out = files["dir"] / "c.txt"
    dot = files["dir"] / "c.dot"
    assert run(capsys, "gen", "cycle", "5", "-o", str(out), "--dot", str(dot))[0] == 0
    assert out.read_text().splitlines()[0] == "5" and dot.read_text().startswith("graph")


def test_analyze_and_classify(files, capsys):
    code, out = run(capsys, "analyze", files["tri"], "--json")
    rep = json.loads(out.out)
    assert code == 0 and rep["proper_bridges"] == [[0, 3]]
    code, out = run(capsys, "classify-h", files["k4"], "--json")
    assert code == 0 and json.loads(out.out)["fvs"] == "NPComplete"


def test_oracle_colouring(files, capsys):
    code, out = run(capsys, "oracle", "colouring", files["pet"], "--json")
    assert code == 0 and json.loads(out.out)["value"] == 3


def test_usage_errors(files, capsys):
    assert run(capsys, "solve", "vertexcover", files["k4"])[0] == 2
    assert run(capsys, "solve", "fvs", str(files["dir"] / "missing.txt"))[0] == 2
    assert run(capsys, "check", files["k4"], "--spider", "1,1")[0] == 2
    bad = files["dir"] / "bad.txt"
    bad.write_text("3\n0 1\n1 z\n")
    code, out = run(capsys, "solve", "fvs", str(bad), "--json")
    assert code == 2 and "line 3" in json.loads(out.out)["message"]
