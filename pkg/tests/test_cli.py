import json

import pytest

from arp import fixtures as bundled
from arp.cli import main


def run_cli(capsysbinary, *argv):
    code = main(list(argv))
    captured = capsysbinary.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def motivating():
    return str(bundled.motivating_path())


class TestSolve:
    def test_csv_table(self, capsysbinary, motivating, tmp_path):
        out = tmp_path / "plans.csv"
        code, stdout, stderr = run_cli(
            capsysbinary, "solve", "--input", motivating, "--capacity", "3",
            "--step", "0.001", "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().strip().split("\n")
        assert len(lines) == 7
        assert lines[1] == "1,F7 F8 F9,6,25,3,0.001,0.249"
        assert lines[6] == "6,F1 F2 F3,27,46,3,0.75,0.999"

    def test_stdout_and_determinism(self, capsysbinary, motivating):
        code1, out1, _ = run_cli(capsysbinary, "solve", "--input", motivating, "--step", "0.01")
        code2, out2, _ = run_cli(capsysbinary, "solve", "--input", motivating, "--step", "0.01")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_breakpoints_go_to_stderr(self, capsysbinary, motivating):
        code, stdout, stderr = run_cli(
            capsysbinary, "solve", "--input", motivating, "--step", "0.01", "--breakpoints",
        )
        assert code == 0
        assert b"breakpoints:" in stderr
        assert b"breakpoints:" not in stdout

    def test_dataset_config_fallback(self, capsysbinary, motivating):
        # The bundled dataset embeds capacity 3; omitting --capacity matches passing it.
        _, with_flag, _ = run_cli(capsysbinary, "solve", "--input", motivating,
                                  "--capacity", "3", "--step", "0.05")
        _, without_flag, _ = run_cli(capsysbinary, "solve", "--input", motivating, "--step", "0.05")
        assert with_flag == without_flag


class TestSolveOne:
    def test_alpha_point_nine(self, capsysbinary, motivating):
        code, stdout, _ = run_cli(capsysbinary, "solve-one", "--input", motivating, "--alpha", "0.9")
        assert code == 0
        payload = json.loads(stdout)
        assert payload["plan"]["features"] == [1, 2, 3]
        assert payload["proven_optimal"] is True

    def test_bad_alpha_exits_one(self, capsysbinary, motivating):
        code, stdout, stderr = run_cli(capsysbinary, "solve-one", "--input", motivating, "--alpha", "1.5")
        assert code == 1
        assert stdout == b""
        assert b"ALPHA_OUT_OF_RANGE" in stderr


class TestValue:
    def test_kano_pipeline(self, capsysbinary, tmp_path):
        dataset = {
            "features": [{"id": 1, "name": "A", "effort": 2}],
            "stakeholders": [{"id": 1, "weight": 5}],
            "values": {"kano": [
                {"feature_id": 1, "stakeholder_id": 1,
                 "functional": [100, 0, 0, 0, 0], "dysfunctional": [0, 0, 5, 11, 84]},
            ]},
        }
        path = tmp_path / "kano.json"
        path.write_text(json.dumps(dataset))
        code, stdout, _ = run_cli(capsysbinary, "value", "kano", "--input", str(path))
        assert code == 0
        lines = stdout.decode().strip().split("\n")
        assert lines[0].startswith("feature_id,name,effort,sat,dissat,a,o,m,i,r,q")
        assert lines[1].startswith("1,A,2,1,0.84")  # S = 1.0, DS = 0.84 for this response

    def test_mode_mismatch(self, capsysbinary, motivating):
        code, _, stderr = run_cli(capsysbinary, "value", "kano", "--input", motivating)
        assert code == 1
        assert b"precomputed" in stderr


class TestBaseline:
    def test_greedy_satisfaction(self, capsysbinary, motivating):
        code, stdout, _ = run_cli(capsysbinary, "baseline", "greedy",
                                  "--input", motivating, "--factor", "satisfaction")
        assert code == 0
        assert json.loads(stdout)["features"] == [1, 2, 3]

    def test_greedy2(self, capsysbinary, motivating):
        code, stdout, _ = run_cli(capsysbinary, "baseline", "greedy2", "--input", motivating,
                                  "--factor-a", "satisfaction", "--factor-b", "dissatisfaction")
        assert code == 0
        assert json.loads(stdout)["features"] == [1, 2, 7]

    def test_heuristic_suite(self, capsysbinary, motivating):
        code, stdout, _ = run_cli(capsysbinary, "baseline", "heuristics",
                                  "--input", motivating, "--step", "0.01", "--format", "json")
        assert code == 0
        payload = json.loads(stdout)["plans"]
        assert [p["heuristic"] for p in payload] == [f"H{i}" for i in range(1, 9)]

    def test_random_seeded(self, capsysbinary, motivating):
        args = ("baseline", "random", "--input", motivating, "--reps", "50",
                "--seed", "7", "--step", "0.05")
        code1, out1, _ = run_cli(capsysbinary, *args)
        code2, out2, _ = run_cli(capsysbinary, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["replications"] == 50
        assert payload["dominated"] + payload["identical"] + payload["undominated"] == 50


class TestOracle:
    def test_scalarized(self, capsysbinary, motivating):
        code, stdout, _ = run_cli(capsysbinary, "oracle", "scalarized",
                                  "--input", motivating, "--alpha", "0.5")
        assert code == 0
        payload = json.loads(stdout)
        assert payload["objective"] == pytest.approx(-7.0)
        assert len(payload["argmax"]) == 6

    def test_pareto(self, capsysbinary, motivating):
        code, stdout, _ = run_cli(capsysbinary, "oracle", "pareto", "--input", motivating)
        assert code == 0
        front = json.loads(stdout)["front"]
        assert {(p["ts"], p["tds"]) for p in front} >= {(6.0, 25.0), (27.0, 46.0), (19.0, 33.0)}


class TestAnalyze:
    def test_diff_and_core(self, capsysbinary, motivating, tmp_path):
        plans_path = tmp_path / "plans.json"
        run_cli(capsysbinary, "solve", "--input", motivating, "--format", "json",
                "--out", str(plans_path))
        code, stdout, _ = run_cli(capsysbinary, "analyze", "diff",
                                  "--plans", str(plans_path), "--a", "1", "--b", "6")
        assert code == 0
        assert json.loads(stdout)["symmetric_difference"] == [1, 2, 3, 7, 8, 9]
        code, stdout, _ = run_cli(capsysbinary, "analyze", "core", "--plans", str(plans_path))
        assert code == 0
        assert json.loads(stdout)["core_features"] == []

    def test_diff_bad_plan_id(self, capsysbinary, motivating, tmp_path):
        plans_path = tmp_path / "plans.json"
        run_cli(capsysbinary, "solve", "--input", motivating, "--format", "json",
                "--out", str(plans_path))
        code, _, stderr = run_cli(capsysbinary, "analyze", "diff",
                                  "--plans", str(plans_path), "--a", "1", "--b", "99")
        assert code == 1
        assert b"plan ids" in stderr

    def test_kappa_on_bundled_table(self, capsysbinary):
        code, stdout, _ = run_cli(capsysbinary, "analyze", "kappa",
                                  "--rankings", str(bundled.rankings_path("satisfaction")))
        assert code == 0
        payload = json.loads(stdout)
        assert payload["raters"] == 20
        assert payload["kappa"] == pytest.approx(0.0409, abs=0.02)

    def test_compare_manual_csv(self, capsysbinary, tmp_path):
        manual = tmp_path / "manual.csv"
        manual.write_text("ts,tds\n10,8\n")
        optimized = tmp_path / "optimized.csv"
        optimized.write_text("ts,tds\n20,4\n")
        code, stdout, _ = run_cli(capsysbinary, "analyze", "compare-manual",
                                  "--manual", str(manual), "--optimized", str(optimized))
        assert code == 0
        payload = json.loads(stdout)
        assert payload["satisfaction_improvement_pct"] == pytest.approx(100.0)
        assert payload["dissatisfaction_improvement_pct"] == pytest.approx(100.0)


class TestErrorPaths:
    def test_usage_error_exits_one(self, capsysbinary):
        code, stdout, stderr = run_cli(capsysbinary, "solve")  # missing --input
        assert code == 1
        assert stdout == b""
        assert b"error" in stderr

    def test_unknown_subcommand(self, capsysbinary):
        code, _, stderr = run_cli(capsysbinary, "frobnicate")
        assert code == 1

    def test_missing_input_file(self, capsysbinary, tmp_path):
        code, stdout, stderr = run_cli(capsysbinary, "solve", "--input", str(tmp_path / "nope.json"))
        assert code == 1
        assert b"PARSE_ERROR" in stderr

    def test_validation_details_on_stderr(self, capsysbinary, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"features": [], "stakeholders": [], "values": {}}))
        code, stdout, stderr = run_cli(capsysbinary, "solve", "--input", str(path))
        assert code == 1
        assert stdout == b""
        assert b"- " in stderr  # itemized diagnostics
