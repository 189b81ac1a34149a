"""Command-line front end tests, run in-process."""

import json
import subprocess
import sys

import pytest

from robinsonblocks.cli import main
from robinsonblocks.render import parse_ascii
from robinsonblocks.supertile import build


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_formula_closed_form(capsys):
    code, out, _ = run_cli(capsys, "formula", "--n", "3", "--which", "A")
    assert code == 0
    assert out == "528\n"


def test_formula_coefficients(capsys):
    code, out, _ = run_cli(capsys, "formula", "--n", "3", "--which", "a")
    assert (code, out) == (0, "5\n")
    code, out, _ = run_cli(capsys, "formula", "--n", "3", "--which", "b")
    assert (code, out) == (0, "2\n")


def test_formula_paperfolding_labeled_conjecture(capsys):
    code, out, err = run_cli(capsys, "formula", "--n", "4", "--which", "P")
    assert code == 0
    assert out == "316\n"
    assert "conjecture" in err


def test_formula_domain_error_exit_2(capsys):
    code, out, err = run_cli(capsys, "formula", "--n", "1", "--which", "A")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_bad_flags_exit_2(capsys):
    assert run_cli(capsys, "count")[0] == 2
    assert run_cli(capsys, "nonsense")[0] == 2
    assert run_cli(capsys, "count", "--n", "2", "--restrict", "5,5")[0] == 2


def test_count_plain(capsys):
    code, out, err = run_cli(capsys, "count", "--n", "2")
    assert code == 0
    assert out == "224\n"
    assert "stabilized at rank" in err


def test_count_restricted_base_cases(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "2", "--restrict", "1,1")
    assert (code, out) == (0, "56\n")
    code, out, _ = run_cli(capsys, "count", "--n", "3", "--restrict", "1,2")
    assert (code, out) == (0, "124\n")


def test_count_non_stabilization_exit_1(capsys):
    code, out, err = run_cli(capsys, "count", "--n", "3", "--max-rank", "3")
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_count_csv(capsys, tmp_path):
    csv_path = tmp_path / "n2.csv"
    code, out, _ = run_cli(capsys, "count", "--n", "2", "--csv", str(csv_path))
    assert code == 0
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "n,rank,count,stabilized"
    assert lines[-1].split(",")[2] == out.strip()


def test_count_cache_round_trip(capsys, tmp_path):
    cache = tmp_path / "cache"
    code1, out1, _ = run_cli(capsys, "count", "--n", "2", "--cache", str(cache))
    files = sorted(cache.glob("*.rbps"))
    assert code1 == 0 and files
    # Second run hits the cache and prints identical output.
    code2, out2, _ = run_cli(capsys, "count", "--n", "2", "--cache", str(cache))
    assert (code1, out1) == (code2, out2)
    assert out1 == "224\n"


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ROBINSONBLOCKS_CACHE", str(tmp_path / "envcache"))
    code, out, _ = run_cli(capsys, "count", "--n", "2")
    assert code == 0 and out == "224\n"
    assert sorted((tmp_path / "envcache").glob("*.rbps"))


def test_cache_inspect(capsys, tmp_path):
    cache = tmp_path / "cache"
    run_cli(capsys, "count", "--n", "2", "--cache", str(cache))
    target = sorted(cache.glob("*.rbps"))[-1]
    code, out, _ = run_cli(capsys, "cache", "--inspect", str(target))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,count,version"
    n, count, version = lines[1].split(",")
    assert (n, version) == ("2", "1")


def test_cache_inspect_corrupt_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.rbps"
    bad.write_bytes(b"garbage")
    code, _, err = run_cli(capsys, "cache", "--inspect", str(bad))
    assert code == 1
    assert err.startswith("error:")


def test_verify_range(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-min", "2", "--n-max", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,closed_form,recurrence,oracle,match"
    assert len(lines) == 5
    assert all(line.endswith("true") for line in lines[1:])


def test_verify_non_stabilization_exit_1(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-min", "4", "--n-max", "4", "--max-rank", "3")
    assert code == 1
    assert "false" in out


def test_supertile_ascii_round_trip(capsys):
    code, out, _ = run_cli(capsys, "supertile", "--rank", "3", "--facing", "SE")
    assert code == 0
    assert parse_ascii(out) == build(3, "SE")


def test_supertile_json(capsys, tmp_path):
    path = tmp_path / "grid.json"
    code, _, _ = run_cli(
        capsys, "supertile", "--rank", "2", "--out", "json", "--output", str(path)
    )
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["width"] == 3 and len(doc["cells"]) == 9


def test_supertile_svg(capsys):
    code, out, _ = run_cli(capsys, "supertile", "--rank", "2", "--out", "svg")
    assert code == 0
    assert out.startswith("<?xml") and "</svg>" in out


def test_render_from_json(capsys, tmp_path):
    grid_path = tmp_path / "grid.json"
    svg_path = tmp_path / "grid.svg"
    run_cli(capsys, "supertile", "--rank", "3", "--out", "json", "--output", str(grid_path))
    code, _, _ = run_cli(
        capsys, "render", "--input", str(grid_path), "--out", str(svg_path), "--overlay"
    )
    assert code == 0
    text = svg_path.read_text()
    assert "</svg>" in text and "<rect" in text


def test_stdout_byte_identical_across_runs_and_threads(capsys):
    results = set()
    for threads in ("1", "1", "3"):
        code, out, _ = run_cli(capsys, "count", "--n", "4", "--threads", threads)
        assert code == 0
        results.add(out)
    assert len(results) == 1
    runs = set()
    for threads in ("1", "2"):
        code, out, _ = run_cli(
            capsys, "verify", "--n-min", "2", "--n-max", "3", "--threads", threads
        )
        assert code == 0
        runs.add(out)
    assert len(runs) == 1


def test_console_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "robinsonblocks.cli", "formula", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "224\n"
