import json

import pytest

from quadlie.cli import main
from quadlie.jsonio import algebra_to_json
from quadlie.liealg import heisenberg


@pytest.fixture()
def h3_file(tmp_path):
    path = tmp_path / "h3.json"
    path.write_text(json.dumps(algebra_to_json(heisenberg())))
    return path


@pytest.fixture()
def triangle_file(tmp_path):
    path = tmp_path / "triangle.txt"
    path.write_text("a b\nb c\nc a\n")
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def test_analyze_heisenberg(capsys, h3_file):
    code, out = run(capsys, "analyze", h3_file, "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"]["kind"] == "refuted_obstruction"
    assert report["verdict"]["certificate"]["kind"] == "dim_series"
    assert report["verdict"]["certificate"]["j"] == 1


def test_graph_triangle_admits(capsys, triangle_file):
    code, out = run(capsys, "graph", triangle_file, "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"]["kind"] == "admits"
    assert report["prediction"] == "admits"
    assert report["agree"] is True


def test_graph_json_input(capsys, tmp_path):
    path = tmp_path / "c4.json"
    path.write_text(
        json.dumps(
            {
                "vertices": ["a", "b", "c", "d"],
                "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
            }
        )
    )
    code, out = run(capsys, "graph", path, "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"]["kind"] == "refuted_obstruction"
    assert report["agree"] is True


def test_free_two_two_refuted_with_dim_series(capsys):
    code, out = run(capsys, "free", "2", "2", "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"]["certificate"]["kind"] == "dim_series"
    assert report["verdict"]["certificate"]["j"] == 1


def test_parabolic_case(capsys):
    code, out = run(capsys, "parabolic", "B3:g3", "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"]["kind"] == "admits"
    assert report["prediction"] == "n32"
    assert report["grading_dims"] == [3, 3]


def test_parabolic_obstructions_only(capsys):
    code, out = run(capsys, "parabolic", "E6:g3", "--obstructions-only", "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"]["kind"] == "refuted_obstruction"
    # top layer of the grading is recorded
    assert report["grading_dims"][-1] == 5


def test_series_subcommand(capsys, h3_file, tmp_path):
    code, out = run(capsys, "series", h3_file, "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["descending_dims"] == [3, 1, 0]
    assert report["ascending_dims"] == [0, 1, 3]

    sub = tmp_path / "v.json"
    sub.write_text(json.dumps({"ambient_dim": 3, "vectors": [["1", "0", "0"]]}))
    code, out = run(capsys, "series", h3_file, "--subspace", sub, "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["subspace_dim"] == 1


def test_verify_round_trip(capsys, tmp_path, triangle_file):
    code, out = run(capsys, "graph", triangle_file, "--output", "json")
    report_path = tmp_path / "report.json"
    report_path.write_text(out)
    code, out = run(capsys, "verify", report_path)
    assert code == 0
    assert out.startswith("OK:")

    tampered = json.loads(report_path.read_text())
    n = tampered["algebra"]["dim"]
    tampered["verdict"]["certificate"]["witness"] = [["0"] * n for _ in range(n)]
    report_path.write_text(json.dumps(tampered))
    code, out = run(capsys, "verify", report_path)
    assert code == 1
    assert out.startswith("FAIL:")


def test_exit_code_2_on_bad_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["analyze", str(bad)]) == 2
    missing = tmp_path / "missing.json"
    assert main(["analyze", str(missing)]) == 2
    loop = tmp_path / "loop.txt"
    loop.write_text("a a\n")
    assert main(["graph", str(loop)]) == 2
    assert main(["parabolic", "B3"]) == 2
    assert main(["parabolic", "Z9:g1"]) == 2
    assert main(["free", "0", "2"]) == 2


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_deterministic_reports(capsys, h3_file):
    _, out1 = run(capsys, "analyze", h3_file, "--output", "json")
    _, out2 = run(capsys, "analyze", h3_file, "--output", "json")
    assert out1 == out2


def test_timings_flag_adds_block(capsys, h3_file):
    code, out = run(capsys, "analyze", h3_file, "--output", "json", "--timings")
    assert code == 0
    assert "timings" in json.loads(out)


def test_env_override(capsys, h3_file, monkeypatch):
    monkeypatch.setenv("QUADLIE_SEED", "777")
    code, out = run(capsys, "analyze", h3_file, "--output", "json")
    assert json.loads(out)["config"]["seed"] == 777
    # CLI flag wins over the environment
    code, out = run(capsys, "analyze", h3_file, "--output", "json", "--seed", "9")
    assert json.loads(out)["config"]["seed"] == 9


def test_text_output_mentions_verdict(capsys, h3_file):
    code, out = run(capsys, "analyze", h3_file)
    assert code == 0
    assert "verdict: refuted_obstruction" in out
