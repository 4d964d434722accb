"""Command-line surface: verbs, exit codes, and byte-level determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from germlab.cli import main


def run_cli(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_le_inline_cylinder(capsys):
    code, out = run_cli(capsys, "le", "--vars", "x,y,z", "--g", "x^2+y^2", "--l", "z")
    assert code == 0
    assert "lambda0 = 0" in out and "lambda1 = 1" in out


def test_milnor_nonisolated_exits_one(capsys):
    code = main(["milnor", "--vars", "x,y", "--g", "x^2*y"])
    captured = capsys.readouterr()
    assert code == 1
    assert "positive dimension" in captured.err


def test_milnor_inline(capsys):
    code, out = run_cli(capsys, "milnor", "--vars", "x,y", "--g", "x^3+y^3", "--format", "json")
    assert code == 0
    assert json.loads(out)["mu"] == 4


def test_verify_fixture_all_pass(capsys):
    code, out = run_cli(capsys, "verify", "--fixture", "cylinder", "--N", "2..8")
    assert code == 0
    assert "overall: PASS" in out


def test_verify_json_is_deterministic(capsys):
    code1, out1 = run_cli(capsys, "verify", "--fixture", "three-lines", "--format", "json")
    code2, out2 = run_cli(capsys, "verify", "--fixture", "three-lines", "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_failing_dataset_exits_one(capsys):
    code, out = run_cli(capsys, "brasselet", "--fixture", "parity-negative")
    assert code == 1
    assert "FAIL" in out


def test_polar_and_gap_verbs(capsys):
    code, out = run_cli(capsys, "polar", "--vars", "x,y,z", "--g", "x^2+y^2+z^3", "--f", "z")
    assert code == 0 and "dimension at the origin: 1" in out
    code, out = run_cli(capsys, "gap", "--fixture", "cylinder-z3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["threshold"] == 4 and doc["exact_max"] == "3"


def test_critical_locus_verb(capsys):
    code, out = run_cli(
        capsys, "critical-locus", "--vars", "x,y,z", "--g", "x^2+y^2", "--f", "z"
    )
    assert code == 0
    assert "dimension at the origin: 1" in out
    assert "meets {f = 0} only at the origin: True" in out


def test_fixtures_verb(capsys):
    code, out = run_cli(capsys, "fixtures")
    assert code == 0
    assert "cylinder" in out.splitlines()


def test_export_dataset_round_trips(tmp_path, capsys):
    out_file = tmp_path / "cyl.json"
    code, _ = run_cli(
        capsys, "export-dataset", "--fixture", "cylinder", "--N", "3", "-o", str(out_file)
    )
    assert code == 0
    code, out = run_cli(capsys, "brasselet", "--scenario", str(out_file))
    assert code == 0
    assert "main" in out and "overall: PASS" in out


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])  # no input source
    assert exc.value.code == 2


def test_mutually_exclusive_inputs():
    with pytest.raises(SystemExit) as exc:
        main(["milnor", "--fixture", "cylinder", "--vars", "x,y", "--g", "x^2"])
    assert exc.value.code == 2


def test_byte_identical_json_across_processes(tmp_path):
    cmd = [
        sys.executable,
        "-m",
        "germlab.cli",
        "verify",
        "--fixture",
        "pinch-point",
        "--format",
        "json",
    ]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout  # nonempty report


def test_iteration_cap_flows_through(capsys):
    code = main(["milnor", "--vars", "x,y", "--g", "x^2*y^2 - (x - y)^2", "--caps", "3"])
    captured = capsys.readouterr()
    assert code == 1
    assert "cap exceeded" in captured.err


def test_verify_scenario_file(tmp_path, capsys):
    out_file = tmp_path / "exported.json"
    code, _ = run_cli(
        capsys, "export-dataset", "--fixture", "pinch-point", "--N", "2", "-o", str(out_file)
    )
    assert code == 0
    code, out = run_cli(capsys, "verify", "--scenario", str(out_file))
    assert code == 0
    assert "overall: PASS" in out


def test_verify_with_jobs_matches_serial(capsys):
    _, serial = run_cli(capsys, "verify", "--fixture", "cylinder", "--format", "json")
    _, threaded = run_cli(
        capsys, "verify", "--fixture", "cylinder", "--format", "json", "--jobs", "3"
    )
    assert serial == threaded
