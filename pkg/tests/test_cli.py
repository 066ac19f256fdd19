import json
import math
import os
import subprocess
import sys

import pytest

from adiasearch.cli import main
from adiasearch.grover import grover_q_of_tau, matched_diabaticity


def run_cli(args, tmp_path, name):
    out = tmp_path / name
    code = main(args + ["--out", str(out)])
    return code, out


class TestSpectrumCommand:
    def test_columns_and_boundary_rows(self, tmp_path):
        code, out = run_cli(["spectrum", "--n", "2", "--samples", "101"], tmp_path, "spec.csv")
        assert code == 0
        lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert lines[0] == "s,E0,E1,gap,q_ideal"
        first = [float(x) for x in lines[1].split(",")]
        assert first == [0.0, 0.0, 1.0, 1.0, 0.25]
        mid = [float(x) for x in lines[51].split(",")]
        assert mid[0] == 0.5 and mid[3] == 0.5
        assert len(lines) - 1 == 101

    def test_json_format(self, tmp_path):
        code, out = run_cli(
            ["spectrum", "--n", "2", "--samples", "3", "--format", "json"], tmp_path, "spec.json"
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["columns"] == ["s", "E0", "E1", "gap", "q_ideal"]
        assert len(payload["rows"]) == 3


class TestScheduleCommand:
    def test_symmetry_and_header(self, tmp_path):
        code, out = run_cli(
            ["schedule", "--schedule", "proposed", "--n", "4", "--eps", "0.02", "--samples", "5"],
            tmp_path,
            "sched.csv",
        )
        assert code == 0
        text = out.read_text()
        T = 2.0 * math.sqrt(15.0) / 0.02
        assert f"T={T!r}" in text.splitlines()[0]
        rows = [l.split(",") for l in text.splitlines() if l and not l.startswith("#")][1:]
        tau_mid, s_mid, _ = (float(x) for x in rows[2])
        assert tau_mid == 0.5 and s_mid == pytest.approx(0.5, abs=1e-14)

    def test_original_matches_grover_curve(self, tmp_path):
        code, out = run_cli(
            ["schedule", "--schedule", "original", "--n", "4", "--samples", "41"],
            tmp_path,
            "orig.csv",
        )
        assert code == 0
        rows = [l.split(",") for l in out.read_text().splitlines() if not l.startswith("#")][1:]
        for row in rows:
            tau, _, q = (float(x) for x in row)
            assert q == pytest.approx(grover_q_of_tau(tau, 16.0), abs=1e-12)


class TestSimulateCommand:
    def test_columns_initial_row_and_rerun_bytes(self, tmp_path):
        args = [
            "simulate", "--schedule", "proposed", "--n", "4", "--eps", "0.1",
            "--samples", "101", "--atol", "1e-12", "--rtol", "1e-12",
        ]
        code, out = run_cli(args, tmp_path, "sim1.csv")
        assert code == 0
        code, out2 = run_cli(args, tmp_path, "sim2.csv")
        assert code == 0
        assert out.read_bytes() == out2.read_bytes()

        lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert lines[0] == "tau,s,p,eps_exact,norm_residual"
        first = [float(x) for x in lines[1].split(",")]
        assert first[0] == 0.0
        assert first[2] == pytest.approx(1.0 / 16.0, abs=1e-14)
        assert first[3] <= 1e-12
        residuals = [abs(float(l.split(",")[4])) for l in lines[1:]]
        assert max(residuals) <= 1e-9

    def test_float_fields_round_trip(self, tmp_path):
        _, out = run_cli(
            ["simulate", "--schedule", "linear", "--n", "2", "--eps", "0.1", "--samples", "11"],
            tmp_path,
            "sim.csv",
        )
        lines = [l for l in out.read_text().splitlines() if not l.startswith("#")][1:]
        for line in lines:
            for field in line.split(","):
                value = float(field)
                assert repr(value) == field


class TestCrossingCommand:
    def test_matched_rate_reports_absence(self, tmp_path):
        code, out = run_cli(["crossing", "--n", "10", "--k", "1"], tmp_path, "cross.json")
        assert code == 0
        entries = json.loads(out.read_text())
        assert entries[0]["n"] == 10
        assert entries[0]["eps_used"] == pytest.approx(matched_diabaticity(1024.0, 1.0))
        assert entries[0]["no_crossing"] is True

    def test_slow_rate_finds_crossings(self, tmp_path):
        code, out = run_cli(["crossing", "--n", "10,12", "--k", "0.125"], tmp_path, "cross.json")
        assert code == 0
        entries = json.loads(out.read_text())
        assert [e["n"] for e in entries] == [10, 12]
        for entry in entries:
            assert entry["residual"] <= 1e-9
            assert entry["t_cross"] == pytest.approx(
                entry["tau_cross"] * 2.0 * math.sqrt(2.0**entry["n"] - 1.0) / entry["eps_used"],
                rel=1e-12,
            )
        assert entries[1]["t_cross"] <= entries[0]["t_cross"]

    def test_thread_cap_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("ADIASEARCH_THREADS", "1")
        code, out = run_cli(["crossing", "--n", "10,12", "--k", "0.125"], tmp_path, "cross1.json")
        assert code == 0
        monkeypatch.delenv("ADIASEARCH_THREADS")
        _, out2 = run_cli(["crossing", "--n", "10,12", "--k", "0.125"], tmp_path, "cross2.json")
        assert out.read_bytes() == out2.read_bytes()


class TestProtocolCommand:
    def test_payload_and_guarantee(self, tmp_path):
        code, out = run_cli(
            ["protocol", "--n", "8", "--eps", "0.1", "--p", "0.3",
             "--trials", "50000", "--seed", "11"],
            tmp_path,
            "prot.json",
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert set(payload) == {"T", "t_f", "p_exact", "empirical_frequency", "trials", "seed"}
        assert payload["p_exact"] >= 0.3 - 1e-6
        sigma = math.sqrt(payload["p_exact"] * (1 - payload["p_exact"]) / payload["trials"])
        assert abs(payload["empirical_frequency"] - payload["p_exact"]) <= 3 * sigma

    def test_uniform_target_skips_evolution(self, tmp_path):
        code, out = run_cli(
            ["protocol", "--n", "4", "--eps", "0.1", "--p", "0.0625",
             "--trials", "10", "--seed", "1"],
            tmp_path,
            "prot.json",
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["t_f"] == 0.0
        assert payload["p_exact"] == 0.0625


class TestResourcesCommand:
    def test_payload(self, tmp_path):
        N = 2.0**10
        code, out = run_cli(
            ["resources", "--n", "10", "--eps", "0.5", "--S", "1", "--tc",
             str(4.0 * math.sqrt(N)), "--alpha", str(math.exp(-1.0)), "--c", "0"],
            tmp_path,
            "res.json",
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert set(payload) == {
            "p_max", "advantage_threshold", "required_runs", "adiabatic_runtime", "grover_runtime",
        }
        assert payload["p_max"] == 0.5
        assert payload["required_runs"] == 2
        assert payload["adiabatic_runtime"] == pytest.approx(8.0 * math.sqrt(N))

    def test_unbounded_processors_sentinel(self, tmp_path):
        N = 2.0**10
        t_c = 4.0 * math.sqrt(N)
        code, out = run_cli(
            ["resources", "--n", "10", "--eps", "0.5", "--S", "0", "--tc", str(t_c),
             "--alpha", "0.01", "--c", "1.5"],
            tmp_path,
            "res.json",
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["adiabatic_runtime"] == pytest.approx(t_c + 1.5)


class TestExitCodes:
    def test_argument_errors(self, capsys):
        assert main(["schedule", "--schedule", "bogus", "--n", "4"]) == 2
        assert main(["spectrum"]) == 2
        assert main(["protocol", "--n", "4", "--eps", "0.1", "--p", "0.95"]) == 2
        capsys.readouterr()

    def test_io_error(self, capsys):
        code = main(["spectrum", "--n", "2", "--out", "/nonexistent-dir/x.csv"])
        assert code == 4
        capsys.readouterr()

    def test_numerical_failure_maps_to_three(self, tmp_path, capsys):
        # tolerances this tight cannot be met: step size underflows
        code = main([
            "simulate", "--schedule", "proposed", "--n", "4", "--eps", "0.1",
            "--samples", "11", "--atol", "1e-300", "--rtol", "1e-300",
            "--out", str(tmp_path / "x.csv"),
        ])
        assert code == 3
        capsys.readouterr()

    def test_module_entry_point(self, tmp_path):
        result = subprocess.run(
            [sys.executable, "-m", "adiasearch.cli", "spectrum", "--n", "1", "--samples", "3"],
            capture_output=True,
            text=True,
            env={**os.environ},
        )
        assert result.returncode == 0
        assert result.stdout.splitlines()[1] == "s,E0,E1,gap,q_ideal"
