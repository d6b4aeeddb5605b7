import json

from sample_graphs import inf_to_loop, mixed_emitter, two_loops

from graphck import Graph
from graphck.cli import main


def write_graph(tmp_path, g, name="g.json"):
    path = tmp_path / name
    path.write_text(json.dumps(g.to_json()))
    return str(path)


def test_analyze(tmp_path, capsys):
    code = main(["analyze", write_graph(tmp_path, two_loops())])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["condition_K"] is True
    assert data["stably_complete"]["satisfied"] is True
    assert data["vertices"]["a"]["kind"] == "regular"


def test_canonicalize_with_trace(tmp_path, capsys):
    out = tmp_path / "out.json"
    trace = tmp_path / "trace.json"
    code = main(
        [
            "canonicalize",
            write_graph(tmp_path, mixed_emitter()),
            "--out",
            str(out),
            "--trace",
            str(trace),
        ]
    )
    assert code == 0
    result = Graph.from_json(json.loads(out.read_text()))
    records = json.loads(trace.read_text())
    assert records[0]["kind"] == "BREAKSPLIT"
    assert result.n >= 1


def test_move_collapse(tmp_path, capsys):
    g = Graph(["x", "u", "y"], [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    code = main(["move", write_graph(tmp_path, g), "--op", "collapse", "--vertex", "u"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["vertices"] == ["x", "y"]


def test_move_error_exit_code(tmp_path, capsys):
    g = Graph(["u", "y"], [[0, 1], [0, 0]])  # u is a source
    code = main(["move", write_graph(tmp_path, g), "--op", "collapse", "--vertex", "u"])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_ideals_json(tmp_path, capsys):
    code = main(["ideals", write_graph(tmp_path, inf_to_loop())])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["nodes"]) == 3


def test_ideals_dot(tmp_path, capsys):
    code = main(["ideals", write_graph(tmp_path, inf_to_loop()), "--format", "dot"])
    assert code == 0
    assert "digraph" in capsys.readouterr().out


def test_corner_and_unitize(tmp_path, capsys):
    gpath = write_graph(tmp_path, inf_to_loop())
    cpath = tmp_path / "corner.json"
    code = main(
        ["corner", gpath, "--multiplicities", '{"v": "inf", "w": 1}', "--out", str(cpath)]
    )
    assert code == 0
    code = main(["unitize", str(cpath)])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert "⋆" in data["vertices"]


def test_corner_realize(tmp_path, capsys):
    gpath = write_graph(tmp_path, two_loops())
    code = main(["corner", gpath, "--multiplicities", '{"a": 3}', "--realize"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["vertices"]) == 3


def test_ktheory(tmp_path, capsys):
    code = main(["ktheory", write_graph(tmp_path, two_loops())])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"k0_invariant_factors": [], "k0_free_rank": 0, "k1_free_rank": 0}


def test_export_dot(tmp_path, capsys):
    code = main(["export-dot", write_graph(tmp_path, inf_to_loop())])
    assert code == 0
    assert 'label="∞"' in capsys.readouterr().out


def test_verify_reports_line(capsys):
    code = main(["verify", "--corpus", "20", "--max-vertices", "4", "--seed", "7"])
    assert code == 0
    assert "20/20 invariance checks passed" in capsys.readouterr().out


def test_verify_deterministic(capsys):
    main(["verify", "--corpus", "10", "--max-vertices", "4", "--seed", "3"])
    first = capsys.readouterr().out
    main(["verify", "--corpus", "10", "--max-vertices", "4", "--seed", "3"])
    second = capsys.readouterr().out
    assert first == second


def test_missing_file_exit_code(capsys):
    code = main(["analyze", "/nonexistent/graph.json"])
    assert code == 1


def test_graph_json_round_trip(tmp_path, capsys):
    gpath = write_graph(tmp_path, inf_to_loop())
    code = main(["canonicalize", gpath])
    assert code == 0
    emitted = json.loads(capsys.readouterr().out)
    assert Graph.from_json(emitted) == Graph.from_json(json.loads(json.dumps(emitted)))


def test_verify_failure_exit_code(monkeypatch, capsys):
    import graphck.cli as cli

    monkeypatch.setattr(
        cli, "verify_corpus", lambda n, mv, seed: (n - 1, [(0, {}, "boom")])
    )
    code = main(["verify", "--corpus", "5"])
    assert code == 2
    assert "boom" in capsys.readouterr().err


def test_fuel_env_override(monkeypatch):
    import graphck.canonical as canonical

    monkeypatch.setenv(canonical.FUEL_ENV, "17")
    assert canonical._fuel(two_loops()) == 17
    monkeypatch.delenv(canonical.FUEL_ENV)
    assert canonical._fuel(two_loops()) == 1  # |V|^2 for a single vertex
