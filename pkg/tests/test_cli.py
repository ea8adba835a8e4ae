import json
from pathlib import Path

from planlearn.cli import cli_main

FIXTURES = Path(__file__).parent / "fixtures"
DOMAIN = str(FIXTURES / "gripper-domain.pddl")
PROBLEM = str(FIXTURES / "gripper-b1.pddl")


def run(argv):
    return cli_main(argv)


def test_ground_fixture(tmp_path, capsys):
    code = run(["ground", "--domain", DOMAIN, "--problem", PROBLEM,
                "--out-dir", str(tmp_path)])
    assert code == 0
    dump = (tmp_path / "task.strips").read_text()
    assert dump.startswith("planlearn-strips 1\n")
    assert dump.count("\naction ") == 10
    assert (tmp_path / "run.json").exists()
    assert "10 actions" in capsys.readouterr().out


def test_graph_subcommand(tmp_path):
    code = run(["graph", "--domain", DOMAIN, "--problem", PROBLEM,
                "--kind", "slg", "--out-dir", str(tmp_path)])
    assert code == 0
    payload = json.loads((tmp_path / "graph.json").read_text())
    assert payload["kind"] == "slg"
    assert len(payload["nodes"]) == 18
    assert (tmp_path / "graph.dot").read_text().startswith("graph")


def test_solve_blind_and_oracle(tmp_path, capsys):
    code = run(["solve", "--domain", DOMAIN, "--problem", PROBLEM,
                "--heuristic", "hff", "--out-dir", str(tmp_path)])
    assert code == 0
    plan = (tmp_path / "plan.txt").read_text()
    assert plan.strip().endswith("; cost = 3 (unit cost)")
    result = json.loads((tmp_path / "result.json").read_text())
    assert result["status"] == "solved" and result["plan_cost"] == 3
    assert "wall_nanos" not in result  # timing lives in the sidecar
    assert "wall_nanos" in json.loads((tmp_path / "timings.json").read_text())


def test_solve_missing_model_file(tmp_path, capsys):
    code = run(["solve", "--domain", DOMAIN, "--problem", PROBLEM,
                "--heuristic", "model", "--model", str(tmp_path / "nope.json"),
                "--out-dir", str(tmp_path)])
    assert code == 1
    assert "not found" in capsys.readouterr().err


def test_usage_error_exit_code(tmp_path, capsys):
    assert run(["solve", "--heuristic", "hff", "--out-dir", str(tmp_path)]) == 2
    assert run(["nonsense"]) == 2


def test_oracle_json(capsys):
    assert run(["oracle", "--domain", DOMAIN, "--problem", PROBLEM,
                "--heuristic", "hmax"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["heuristic"] == "hmax"
    assert payload["value"] == 2
    assert payload["iterations"] >= 2
    assert "nanoseconds" in payload


def test_oracle_sas_input(capsys):
    assert run(["oracle", "--sas", str(FIXTURES / "gripper-b1.sas"),
                "--heuristic", "hstar"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 3


def test_gen_solve_reproducible(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert run(["gen", "--domain", "gripper", "--train", "1:2",
                    "--validate", "3", "--test", "4", "--seed", "5",
                    "--out-dir", str(out)]) == 0
    for rel in ("manifest.json", "domain.pddl", "train/p00.pddl"):
        assert (a / rel).read_bytes() == (b / rel).read_bytes()
    for out in (a, b):
        assert run(["solve", "--domain", str(a / "domain.pddl"),
                    "--problem", str(a / "train" / "p01.pddl"),
                    "--heuristic", "hadd", "--out-dir", str(out / "solve")]) == 0
    assert (a / "solve/plan.txt").read_bytes() == (b / "solve/plan.txt").read_bytes()
    assert (a / "solve/result.json").read_bytes() == (b / "solve/result.json").read_bytes()


def test_theory_subcommand(tmp_path, capsys):
    code = run(["theory", "--models", "5", "--random-tasks", "20",
                "--out-dir", str(tmp_path)])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("PASS") >= 4
    assert "FAIL" not in out
    verdicts = json.loads((tmp_path / "verdicts.json").read_text())
    names = {v["check"] for v in verdicts}
    assert {"program-dp-equivalence", "lifted-twins", "grounded-twins",
            "scaling-twins", "relaxation-gap"} <= names
    assert all(v["pass"] for v in verdicts)
    assert all({"check", "pair_id", "graph_kind", "wl_equal", "h_values",
                "model_gap", "pass"} <= set(v) for v in verdicts)


def test_no_writes_outside_out_dir(tmp_path, monkeypatch):
    workdir = tmp_path / "cwd"
    out = tmp_path / "out"
    workdir.mkdir()
    monkeypatch.chdir(workdir)
    assert run(["ground", "--domain", DOMAIN, "--problem", PROBLEM,
                "--out-dir", str(out)]) == 0
    assert list(workdir.iterdir()) == []


def test_experiment_subcommand(tmp_path):
    suite = tmp_path / "suite"
    assert run(["gen", "--domain", "gripper", "--train", "1:2", "--validate", "3",
                "--test", "4", "--out-dir", str(suite)]) == 0
    out = tmp_path / "exp"
    assert run(["experiment", "--suite", str(suite / "manifest.json"),
                "--split", "train", "--heuristics", "blind,hff",
                "--out-dir", str(out)]) == 0
    csv = (out / "results.csv").read_text()
    assert csv.splitlines()[0] == "task,heuristic,status,plan_cost,expansions,evaluations,generated"
    assert csv.count("solved") == 4
    cov = (out / "coverage.csv").read_text()
    assert "blind,2,2" in cov and "hff,2,2" in cov
    # identical rerun produces byte-identical primary outputs
    out2 = tmp_path / "exp2"
    assert run(["experiment", "--suite", str(suite / "manifest.json"),
                "--split", "train", "--heuristics", "blind,hff",
                "--jobs", "2", "--out-dir", str(out2)]) == 0
    assert (out / "results.csv").read_bytes() == (out2 / "results.csv").read_bytes()
