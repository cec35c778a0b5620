import pytest

from nutgraphs.cli import run
from nutgraphs.formats import from_graph6, to_graph6
from nutgraphs.graphcore import CirculantSpec, Graph, circulant


@pytest.fixture
def g6file(tmp_path):
    def make(g, name="g.g6"):
        p = tmp_path / name
        p.write_text(to_graph6(g) + "\n")
        return str(p)
    return make


def test_check_stdin_k13(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(to_graph6(Graph.complete(13)) + "\n"))
    assert run(["check", "--format", "g6", "-"]) == 0
    assert capsys.readouterr().out.strip() == "NOT_NUT reason=nonsingular"


def test_check_nut(g6file, capsys):
    assert run(["check", g6file(circulant(CirculantSpec(16, (1, 2, 3, 4, 5, 6))))]) == 0
    assert capsys.readouterr().out.strip() == "NUT kernel=" + ",".join(["1,-1"] * 8)


def test_verify_appendix(capsys):
    assert run(["verify-appendix"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 12 and all(ln.startswith("PASS") for ln in lines)


def test_scan(capsys):
    assert run(["scan", "--n", "8", "--d", "6"]) == 0
    assert capsys.readouterr().out.strip().splitlines()[-1].startswith("hits=0")
    assert run(["scan", "--n", "18", "--d", "12", "--jobs", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "hit jumps=1,2,3,4,5,8" and out[-1] == "hits=6 examined=28"


def test_scan_methods(capsys):
    outs = []
    for extra in ([], ["--method", "kernel"], ["--no-confirm"]):
        assert run(["scan", "--n", "14", "--d", "8", *extra]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2]
    assert outs[0].splitlines()[-1] == "hits=6 examined=15"


def test_circulant_outputs(capsys):
    assert run(["circulant", "--n", "4", "--jumps", "1,2", "--out", "g6"]) == 0
    assert capsys.readouterr().out.strip() == "C~"
    assert run(["circulant", "--n", "4", "--jumps", "1", "--out", "lines"]) == 0
    assert capsys.readouterr().out.splitlines() == ["4", "0 1", "0 3", "1 2", "2 3"]
    assert run(["circulant", "--n", "4", "--jumps", "1", "--out", "dot"]) == 0
    assert capsys.readouterr().out.startswith("graph G {")
    assert run(["circulant", "--n", "4", "--jumps", "1"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "order=4 edges=4"


def test_circulant_bad_spec(capsys):
    assert run(["circulant", "--n", "8", "--jumps", "5"]) == 2
    assert "jumps" in capsys.readouterr().err


def test_fowler(g6file, capsys):
    path = g6file(circulant(CirculantSpec(16, (1, 2, 3, 4, 5, 6))))
    assert run(["fowler", "--vertex", "0", path, "--out", "g6"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert from_graph6(out[0]).order == 40
    assert out[1] == "order=40" and out[2].startswith("NUT kernel=")


def test_survey(capsys):
    assert run(["survey", "--d", "12", "--from", "13", "--to", "17"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "n=13 verdict=NONE witness=exhaustive:K13"
    assert out[-1] == "n=17 verdict=EXISTS witness=appendix:n17"


def test_survey_rejects_small(capsys):
    assert run(["survey", "--from", "10", "--to", "17"]) == 2


@pytest.mark.parametrize("argv", [
    ["witness", "--kind", "shift", "--n", "14", "--t", "6"],
    ["witness", "--kind", "blocks", "--n", "18", "--t", "6", "--k", "3"],
])
def test_witness(argv, capsys):
    assert run(argv) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("b=") and out[1] == "Ab=0 confirmed"


def test_witness_blocks_needs_k(capsys):
    assert run(["witness", "--kind", "blocks", "--n", "18", "--t", "6"]) == 2


def test_rewire(g6file, capsys):
    path = g6file(circulant(CirculantSpec(21, (1, 2, 3, 4, 5, 6))))
    assert run(["rewire", "--remove", "0,16", "2,7", "--add", "0,7", "2,16", path, "--out", "g6"]) == 0
    g = from_graph6(capsys.readouterr().out.strip())
    assert g.has_edge(0, 7) and g.has_edge(2, 16)
    assert run(["rewire", "--remove", "0,16", "2,7", "--add", "0,2", "7,16", path]) == 2
    assert run(["rewire", "--remove", "0,1", "2,7", "--add", "0,7", "2,1", path]) == 2


def test_search(g6file, capsys):
    path = g6file(circulant(CirculantSpec(21, (1, 2, 3, 4, 5, 6))))
    assert run(["search", "--seed", "0", "--budget", "100", path, "--out", "g6"]) == 0
    first = capsys.readouterr().out
    assert run(["search", "--budget", "100", path, "--out", "g6"]) == 0
    assert capsys.readouterr().out == first


def test_usage_errors(tmp_path, capsys):
    assert run(["bogus"]) == 2
    assert run(["check", "--nope", "x"]) == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("C~~\n")
    assert run(["check", str(bad)]) == 2
    assert "offset 2" in capsys.readouterr().err
    assert run(["check", str(tmp_path / "missing")]) == 2


def test_dict_and_edges_input(tmp_path, capsys):
    p = tmp_path / "p.txt"
    p.write_text("{0: [1], 1: [0, 2], 2: [1]}")
    assert run(["check", "--format", "dict", str(p)]) == 0
    assert capsys.readouterr().out.strip() == "NOT_NUT reason=zeros zeros=1"
    p.write_text("3\n0 1\n1 2\n")
    assert run(["check", "--format", "edges", str(p)]) == 0
    assert capsys.readouterr().out.strip() == "NOT_NUT reason=zeros zeros=1"
