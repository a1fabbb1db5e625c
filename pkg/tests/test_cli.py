"""Command-line interface: parsing, exit codes, output formats."""
from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from h2v import cli
from h2v.report import read_reports


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("text, value", [
    ("1+2i", 1 + 2j), ("-0.5-1e-3i", -0.5 - 1e-3j), ("3", 3), ("i", 1j), ("-i", -1j),
    ("2.5j", 2.5j), (" 1 - i ", 1 - 1j), ("1e2+1E-2i", 100 + 0.01j),
])
def test_parse_complex(text, value):
    assert cli.parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "1+", "abc", "1+2", "1i+2", "inf", "nan+1i"])
def test_parse_complex_rejects(text):
    with pytest.raises(cli.UsageError):
        cli.parse_complex(text)


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "--m", "1", "--n", "1", "--z1", "2", "--z2", "3")
    assert code == 0
    assert json.loads(out) == {"m": 1, "n": 1, "z1": [2.0, 0.0], "z2": [3.0, 0.0], "method": "recurrence",
                               "value_re": 5.0, "value_im": 0.0}
    code, out, _ = run(capsys, "eval", "--m", "2", "--n", "1", "--z1", "i", "--z2", "1", "--method", "direct")
    assert (json.loads(out)["value_re"], json.loads(out)["value_im"]) == (-1.0, -2.0)


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "eval", "--m", "1", "--n", "1", "--z1", "x", "--z2", "0")[0] == 2
    assert run(capsys, "eval", "--m", "1")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "eval", "--m", "-1", "--n", "0", "--z1", "0", "--z2", "0")[0] == 3
    assert run(capsys, "verify", "kernels", "--alpha", "1.5", "--out-dir", str(tmp_path))[0] == 3
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert run(capsys, "export", "polynomial", "--m", "1", "--n", "1", "--out", str(blocker / "x"))[0] == 4


def test_export_polynomial_and_rule(capsys):
    code, out, _ = run(capsys, "export", "polynomial", "--m", "1", "--n", "1")
    terms = {(t["e1"], t["e2"]): t for t in json.loads(out)["terms"]}
    assert set(terms) == {(0, 0), (1, 1)}
    code, out, _ = run(capsys, "export", "quadrature-rule", "--n", "2")
    assert out.splitlines()[1] == "-0.7071067811865476,0.886226925452758"
    assert run(capsys, "export", "quadrature-rule", "--n", "0")[0] == 3
    assert run(capsys, "export", "quadrature-rule")[0] == 2


def test_export_kernel_grid(capsys, tmp_path):
    path = tmp_path / "grid.csv"
    code, _, _ = run(capsys, "export", "kernel-grid", "--alpha", "0.5", "--grid", "3x3", "--out", str(path))
    rows = path.read_text().splitlines()
    assert code == 0 and len(rows) == 10
    center = dict(zip(rows[0].split(","), map(float, rows[5].split(","))))
    assert center["x"] == 0 and center["y"] == 0 and center["k_re"] == pytest.approx(0.140625)


def test_export_is_idempotent(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        run(capsys, "export", "kernel-grid", "--alpha", "0.25", "--w", "1+i,0.5", "--out", str(p))
    assert a.read_bytes() == b.read_bytes()


def test_verify_writes_reports(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "orthogonality", "--alpha", "0.5", "--max-degree", "2",
                       "--out-dir", str(tmp_path))
    assert code == 0
    reports = read_reports(str(tmp_path / "reports.jsonl"))
    assert reports and all(r.passed for r in reports)
    csv_rows = (tmp_path / "summary.csv").read_text().splitlines()
    assert csv_rows[0] == "check_id,identity,max_err,passed" and len(csv_rows) == len(reports) + 1
    assert sorted(os.listdir(tmp_path)) == ["reports.jsonl", "summary.csv"]


def test_config_file_and_seed_precedence(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# reduced run\nalpha = 0.5\nmax-degree=2\nseed=5\n")
    args = cli._merge_config(cli.build_parser().parse_args(["verify", "kernels", "--config", str(cfg), "--seed", "9"]))
    assert args.alpha == (0.5,) and args.max_degree == 2 and args.seed == 9
    monkeypatch.setenv("H2V_SEED", "11")
    args = cli._merge_config(cli.build_parser().parse_args(["verify", "kernels", "--config", str(cfg)]))
    assert args.seed == 11
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour=blue\n")
    assert run(capsys, "verify", "kernels", "--config", str(bad))[0] == 2


def test_verify_is_deterministic(capsys, tmp_path):
    def records(d):
        run(capsys, "verify", "limits", "--alpha", "0.5", "--max-degree", "3", "--out-dir", str(d))
        return [{k: v for k, v in r.to_dict().items() if k != "runtime_ms"}
                for r in read_reports(str(d / "reports.jsonl"))]

    assert records(tmp_path / "a") == records(tmp_path / "b")


def test_verify_limits_fails_only_on_documented_checks(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "limits", "--out-dir", str(tmp_path))
    assert code == 1
    failed = {line.split()[1].rstrip(":") for line in out.splitlines() if line.startswith("FAILED")}
    assert failed == {"kernel_limit", "bound_sweep", "tilde_limit"}


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "h2v.cli", "eval", "--m", "0", "--n", "0", "--z1", "0",
                           "--z2", "0"], capture_output=True, text=True, cwd=tmp_path)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value_re"] == 1.0
