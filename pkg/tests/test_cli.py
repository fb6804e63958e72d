"""CLI surface: angle parsing, exit codes, report plumbing."""
import json

import numpy as np
import pytest

from opineq.cli import (EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main,
                        parse_angle)


@pytest.mark.parametrize("text,value", [
    ("pi", np.pi),
    ("pi/3", np.pi / 3),
    ("2*pi/3", 2 * np.pi / 3),
    ("5*pi/12", 5 * np.pi / 12),
    ("0.75", 0.75),
    (" pi / 4 ", np.pi / 4),
    ("0", 0.0),
])
def test_parse_angle(text, value):
    assert abs(parse_angle(text) - value) < 1e-15


def test_parse_angle_rejects_garbage():
    with pytest.raises(ValueError):
        parse_angle("three")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_list(capsys):
    code, out = run_cli(capsys, "list")
    assert code == EXIT_OK
    assert "kantorovich" in out and "inverse_square_candidate" in out


def test_check_single_name(capsys):
    code, out = run_cli(capsys, "check", "--name", "kantorovich",
                        "--dim", "3", "--trials", "4", "--no-timestamp")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["suite"] == "check"
    assert rec["dims"] == [3]
    assert all(c["entry"] == "kantorovich" for c in rec["checks"])


def test_check_unknown_name_is_usage_error(capsys):
    assert main(["check", "--name", "bogus"]) == EXIT_USAGE


def test_check_rejects_bad_trials(capsys):
    assert main(["check", "--name", "ando", "--trials", "0"]) == EXIT_USAGE


def test_check_rejects_bad_interval(capsys):
    assert main(["check", "--name", "ando", "-m", "3", "-M", "1"]) == EXIT_USAGE


def test_check_interval_override(capsys):
    code, out = run_cli(capsys, "check", "--name", "kantorovich", "--trials",
                        "3", "-m", "1", "-M", "2", "--no-timestamp")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["intervals"] == [[1.0, 2.0]]


def test_suite_small(capsys, tmp_path):
    out_file = tmp_path / "suite.json"
    code, out = run_cli(capsys, "suite", "--trials", "2", "--dims", "2",
                        "--no-timestamp", "--output", str(out_file))
    assert code == EXIT_OK
    on_disk = json.loads(out_file.read_text())
    assert on_disk == json.loads(out)
    assert on_disk["ok"] is True


def test_suite_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("OPINEQ_SEED", "123")
    code, out = run_cli(capsys, "suite", "--trials", "2", "--dims", "2",
                        "--no-timestamp")
    assert code == EXIT_OK
    assert json.loads(out)["seed"] == 123


def test_suite_text_format_is_lossless(capsys):
    code, out = run_cli(capsys, "suite", "--trials", "2", "--dims", "2",
                        "--format", "text", "--no-timestamp")
    assert code == EXIT_OK
    for key in ("suite:", "seed:", "min_margin:", "ok:"):
        assert key in out


def test_constants_subcommand(capsys):
    code, out = run_cli(capsys, "constants", "--name", "beta_p",
                        "-m", "1", "-M", "2", "--p", "2")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert abs(rec["value"] - 1.0 / 6.0) < 1e-12
    assert rec["abs_diff"] < 1e-8


def test_constants_missing_parameter(capsys):
    assert main(["constants", "--name", "beta_p", "-m", "1", "-M", "2"]) == EXIT_USAGE


def test_counterexample_subcommand(capsys):
    code, out = run_cli(capsys, "counterexample", "--x", "2",
                        "--alpha", "pi/3", "--beta", "pi/4")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["psd"] is True
    assert abs(rec["trace"] - sum(rec["eigenvalues"])) < 1e-12
    assert abs(rec["T"]["re"][0][0] - 0.08264506) < 1e-8


def test_falsify_candidate_reports_sensitivity_failure(capsys, tmp_path):
    # no violation exists on the family, and the candidate is marked
    # expected-to-fail, so the exit code flags the mismatch
    outdir = tmp_path / "viol"
    code, out = run_cli(capsys, "falsify", "--outdir", str(outdir))
    assert code == EXIT_CHECK_FAILED
    rec = json.loads(out)
    assert rec["violations"] == 0 and rec["mode"] == "grid"
    assert list(outdir.glob("*.json")) == []


def test_falsify_true_check_passes(capsys):
    code, out = run_cli(capsys, "falsify", "--name", "kantorovich",
                        "--budget", "20")
    assert code == EXIT_OK
    assert json.loads(out)["violations"] == 0


def test_falsify_unknown_name(capsys):
    assert main(["falsify", "--name", "bogus"]) == EXIT_USAGE


def test_module_entrypoint():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "opineq", "list"],
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_OK
    assert "ando" in proc.stdout
