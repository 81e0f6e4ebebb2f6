"""End-to-end CLI behavior: output shapes, exit codes, streams."""

import json

import pytest

from qea.cli import main
from qea.scenario import default_scenario, dump_scenario, scenario_from_dict


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_default_grid_text(self, capsys):
        code, out, _ = run(capsys, "table")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].startswith("# scenario sha256=")
        assert lines[1].split() == ["classical", "qpe-n3", "qpe-n2"]
        assert len(lines) == 8  # digest + header + 6 classical rows
        fci_row = [l for l in lines if l.startswith("FCI")][0]
        assert "2032" in fci_row
        dft_row = [l for l in lines if l.startswith("DFT")][0]
        assert "N/A" in dft_row

    def test_ccsdt_alias(self, capsys):
        code, out, _ = run(capsys, "table", "--classical", "CCSDT", "--quantum", "qpe-n3")
        assert code == 0
        assert "CCSD(T)" in out

    def test_csv_stdout_and_file_identical(self, capsys, tmp_path):
        code, out, _ = run(capsys, "table", "--format", "csv")
        assert code == 0
        target = tmp_path / "table.csv"
        code2 = main(["table", "--format", "csv", "--out", str(target)])
        capsys.readouterr()
        assert code2 == 0
        assert target.read_bytes().decode("utf-8") == out
        assert "\r\n" in out

    def test_unknown_method_exit_3(self, capsys):
        code, _, err = run(capsys, "table", "--classical", "HF9")
        assert code == 3
        assert "HF9" in err


class TestScalars:
    def test_threshold_no_epsilon(self, capsys):
        code, out, _ = run(
            capsys, "threshold", "--classical", "CCSD", "--quantum", "qpe-n3",
            "--year", "2025", "--no-epsilon",
        )
        assert code == 0
        assert out.strip() == "21544.3"

    def test_threshold_csv_full_precision(self, capsys):
        code, out, _ = run(
            capsys, "threshold", "--classical", "CCSD", "--quantum", "qpe-n3",
            "--year", "2025", "--no-epsilon", "--format", "csv",
        )
        assert code == 0
        lines = out.split("\r\n")
        assert lines[1] == "classical,quantum,year,threshold_n"
        value = float(lines[2].split(",")[-1])
        assert value == pytest.approx(10 ** (13 / 3), rel=1e-9)

    def test_threshold_never(self, capsys):
        code, out, _ = run(
            capsys, "threshold", "--classical", "DFT", "--quantum", "qpe-n3", "--year", "2025"
        )
        assert code == 0
        assert out.strip() == "never"

    def test_feasible(self, capsys):
        code, out, _ = run(capsys, "feasible", "--quantum", "qpe-n3", "--year", "2025")
        assert code == 0
        assert "deadline_limited_n: 637" in out

    def test_constant_example(self, capsys):
        code, out, _ = run(
            capsys, "constant", "--time-s", "960", "--peak-flops", "9.8e13",
            "--n", "966", "--exponent", "6",
        )
        assert code == 0
        assert float(out.strip()) == pytest.approx(0.12, abs=0.01)

    def test_tgates_example(self, capsys):
        code, out, _ = run(capsys, "tgates", "--n", "192", "--exponent", "5")
        assert code == 0
        assert float(out.strip()) == pytest.approx(2.6e14, rel=0.02)

    def test_backward_year_warning(self, capsys):
        code, out, err = run(
            capsys, "threshold", "--classical", "CCSD", "--quantum", "qpe-n3", "--year", "2020"
        )
        assert code == 0
        assert "warning" in err


class TestCurveAndRobustness:
    def test_curve_csv(self, capsys):
        code, out, _ = run(
            capsys, "curve", "--classical", "FCI", "--quantum", "qpe-n3",
            "--from", "2030", "--to", "2035", "--step", "1", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().split("\r\n")
        assert lines[1].startswith("year,threshold_n")
        assert len(lines) == 2 + 6

    def test_robustness_default_columns(self, capsys):
        code, out, _ = run(capsys, "robustness", "--classical", "FCI")
        assert code == 0
        header = out.split("\n")[1]
        assert "baseline" in header and "logical=0.1" in header

    def test_robustness_custom_vary(self, capsys):
        code, out, _ = run(
            capsys, "robustness", "--classical", "FCI", "--vary", "quantum_time=10"
        )
        assert code == 0
        assert "quantum_time=10" in out

    def test_bad_vary_key(self, capsys):
        code, _, err = run(capsys, "robustness", "--vary", "transmogrify=2")
        assert code == 3
        assert "transmogrify" in err


class TestConvert:
    def test_molecule(self, capsys):
        code, out, _ = run(
            capsys, "convert", "--molecule", "Fe:7,Mo:1,S:9,C:1", "--heuristic", "femoco-mixed"
        )
        assert code == 0
        assert "orbitals: 302" in out
        assert "16.7778" in out

    def test_atoms(self, capsys):
        code, out, _ = run(capsys, "convert", "--basis-functions", "302", "--ratio", "16.7778")
        assert code == 0
        assert out.startswith("atoms: 18")

    def test_needs_arguments(self, capsys):
        code, _, err = run(capsys, "convert")
        assert code == 3


class TestScenarioHandling:
    def test_scenario_file_flag(self, capsys, tmp_path):
        s = scenario_from_dict({"epsilon": 1.0})
        path = tmp_path / "s.json"
        path.write_text(dump_scenario(s), encoding="utf-8")
        code, out, _ = run(
            capsys, "threshold", "--classical", "CCSD", "--quantum", "qpe-n3",
            "--year", "2025", "--scenario", str(path),
        )
        assert code == 0
        assert out.strip() == "21544.3"  # eps = 1 in the file

    def test_env_var_fallback(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "env.json"
        path.write_text(dump_scenario(scenario_from_dict({"epsilon": 1.0})), encoding="utf-8")
        monkeypatch.setenv("QEA_SCENARIO", str(path))
        code, out, _ = run(
            capsys, "threshold", "--classical", "CCSD", "--quantum", "qpe-n3", "--year", "2025"
        )
        assert code == 0
        assert out.strip() == "21544.3"

    def test_invalid_scenario_exit_3(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"bogus_key": 1}', encoding="utf-8")
        code, _, err = run(capsys, "table", "--scenario", str(path))
        assert code == 3
        assert "bogus_key" in err

    def test_usage_error_exit_2(self, capsys):
        code, _, _ = run(capsys, "threshold", "--classical", "CCSD")  # missing options
        assert code == 2

    def test_unknown_subcommand_exit_2(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 2

    def test_no_arguments_shows_usage(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2

    def test_version_flag(self, capsys):
        code, out, _ = run(capsys, "--version")
        assert code == 0
        assert "0.1.0" in out

    def test_text_out_file_identical(self, capsys, tmp_path):
        code, out, _ = run(capsys, "table")
        target = tmp_path / "table.txt"
        assert main(["table", "--out", str(target)]) == 0
        capsys.readouterr()
        assert target.read_text(encoding="utf-8") == out

    def test_curve_text_mode(self, capsys):
        code, out, _ = run(
            capsys, "curve", "--classical", "DFT", "--quantum", "qpe-n3",
            "--from", "2025", "--to", "2026",
        )
        assert code == 0
        header = out.split("\n")[1]
        assert header.split()[:2] == ["year", "threshold_n"]
        assert out.split("\n")[2].split()[1] == "-"  # never-threshold sentinel


class TestCalibrateCommand:
    def test_single_coordinate_calibration(self, capsys, tmp_path):
        # Reset the qubit growth factor and recover it from the anchor.
        base = default_scenario()
        doc = json.loads(dump_scenario(base))
        doc["quantum"]["physical_qubit_trend"]["annual_factor"] = 1.0
        path = tmp_path / "base.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        code, out, err = run(
            capsys, "calibrate", "--scenario", str(path),
            "--anchor", "FCI:qpe-n3:2032",
            "--free", "quantum.physical_qubit_trend.annual_factor",
            "--prefer", "high",
        )
        assert code == 0
        calibrated = scenario_from_dict(json.loads(out))
        factor = calibrated.quantum.physical_qubits.annual_factor
        assert factor == pytest.approx(
            default_scenario().quantum.physical_qubits.annual_factor, abs=2e-4
        )
        assert "# scenario sha256=" in err

    def test_infeasible_exit_4(self, capsys):
        code, _, err = run(
            capsys, "calibrate",
            "--anchor", "DFT:qpe-n3:2030",
            "--free", "quantum.logical_tgate_trend.annual_factor",
        )
        assert code == 4
        assert "DFT:qpe-n3:2030" in err
