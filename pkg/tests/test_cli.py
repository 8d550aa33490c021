"""Tests for the command-line interface."""

import json
import subprocess
import sys


def run_cli(args, env_extra=None, cwd=None):
    import os
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "humbert.cli"] + args,
                          capture_output=True, text=True, env=env, cwd=cwd)


def test_degrees_table(tmp_path):
    res = run_cli(["degrees", "--max", "24"])
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert len(lines) == 13  # header + 12 rows
    assert lines[1].split()[:4] == ["1", "10", "10", "1"]
    assert lines[-1].split()[:4] == ["24", "15", "720", "48"]


def test_degrees_json_schema():
    res = run_cli(["degrees", "--max", "8", "--json"])
    payload = json.loads(res.stdout)
    assert payload["schema"] == "humbert/1"
    assert [r["delta"] for r in payload["rows"]] == [1, 4, 5, 8]


def test_theta_command(tmp_path):
    out = tmp_path / "theta.json"
    res = run_cli(["theta", "--disc", "12", "--prec", "10",
                   "--char", "1100", "--out", str(out)])
    assert res.returncode == 0
    payload = json.loads(out.read_text())
    assert payload["k"] == 3 and payload["ell"] == 0
    assert [4, 2, "2/1"] in payload["series"]["terms"]


def test_find_relation_and_exit_codes(tmp_path):
    res = run_cli(["find", "--disc", "4", "--degree", "2", "--json"])
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["kernel_dim"] == 1

    res = run_cli(["find", "--disc", "12", "--degree", "3"])
    assert res.returncode == 2

    res = run_cli(["find", "--disc", "4", "--degree", "4",
                   "--prec", "48"])
    assert res.returncode == 3


def test_usage_error_exit_code():
    res = run_cli(["find", "--disc", "7", "--degree", "2"])
    assert res.returncode == 1
    res = run_cli(["rosenhain", "--disc", "4", "--prec", "2"])
    assert res.returncode == 1


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("e_1 + @@@")
    res = run_cli(["verify", "--in", str(bad), "--disc", "4"])
    assert res.returncode == 5


def test_verify_pass_and_fail(tmp_path):
    poly = tmp_path / "h4.txt"
    poly.write_text("e_1e_2 - e_3")
    res = run_cli(["verify", "--in", str(poly), "--disc", "4",
                   "--trials", "5"])
    assert res.returncode == 0, res.stderr
    assert "PASS" in res.stdout

    res = run_cli(["verify", "--in", str(poly), "--disc", "5",
                   "--trials", "5", "--tol", "1e-12"])
    assert res.returncode == 4
    assert "FAIL" in res.stdout


def test_orbit_and_fixgroup(tmp_path):
    poly = tmp_path / "h4.txt"
    poly.write_text("e_1e_2 - e_3")
    res = run_cli(["orbit", "--in", str(poly), "--json"])
    assert res.returncode == 0
    assert json.loads(res.stdout)["size"] == 15

    res = run_cli(["fixgroup", "--in", str(poly), "--json"])
    assert res.returncode == 0
    assert json.loads(res.stdout)["order"] == 48


def test_rosenhain_cache_byte_identity(tmp_path):
    cache = tmp_path / "cache"
    env = {"HUMBERT_CACHE_DIR": str(cache)}
    args = ["rosenhain", "--disc", "5", "--prec", "16"]
    first = run_cli(args, env_extra=env)
    assert first.returncode == 0
    assert list(cache.glob("*.json")), "cache miss should write an entry"
    second = run_cli(args, env_extra=env)
    assert second.returncode == 0
    assert first.stdout == second.stdout
