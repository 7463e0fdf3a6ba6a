"""Exercises the lzca executable: exit codes, file formats, reproducibility."""

import os
import subprocess

import pytest

CLI = os.environ.get("LZCA_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="LZCA_CLI not set")


def run(*args, cwd=None):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, cwd=cwd)


def test_lz_on_bits_and_file(tmp_path):
    assert run("lz", "--bits", "010101").stdout.split() == ["4"]
    out = run("lz", "--bits", "010101", "--phrases").stdout.split()
    assert out == ["0", "1", "01", "01", "4"]
    cfg = tmp_path / "x.cfg"
    cfg.write_text("0000 0000\n00")
    assert run("lz", "--input", cfg).stdout.strip() == "4"
    assert run("lz", "--input", cfg, "--region", "2:3").stdout.strip() == "2"


def test_exit_codes(tmp_path):
    assert run().returncode == 2
    assert run("analyze", "--rule", "999", "--width", "50", "--steps", "5", "--out", tmp_path / "a.csv").returncode == 2
    assert run("lz", "--bits", "0101", "--region", "3:5").returncode == 2
    bad = tmp_path / "bad.cfg"
    bad.write_text("01x")
    result = run("lz", "--input", bad)
    assert result.returncode == 3 and "offset 2" in result.stderr
    (tmp_path / "empty.cfg").write_text("\n")
    assert "zero digits" in run("lz", "--input", tmp_path / "empty.cfg").stderr
    assert run("lz", "--input", tmp_path / "missing.cfg").returncode == 3
    assert run("ether", "--spatial", "21").returncode == 4


def test_cts_run(tmp_path):
    desc = tmp_path / "ex.cts"
    desc.write_text("# initial word, then the appendant table\n1\n1\n101\n")
    result = run("cts", "run", desc, "--steps", "6")
    assert result.returncode == 0
    assert result.stdout.split() == ["1", "1", "101", "011", "11", "11", "1101"]
    assert run("cts", "run", desc, "--steps", "3", "--lengths").stdout.split() == ["1", "1", "3", "3"]
    halting = tmp_path / "halt.cts"
    halting.write_text("0\n1\n")
    result = run("cts", "run", halting)
    assert result.stdout.split() == ["0"] and "halted at step 1" in result.stderr


def test_evolve_writes_cfg(tmp_path):
    src = tmp_path / "in.cfg"
    src.write_text("00010000")
    out = tmp_path / "out.cfg"
    assert run("evolve", "--input", src, "--steps", "1", "--out", out).returncode == 0
    assert out.read_text().split() == ["00110000"]
    st = run("evolve", "--input", src, "--steps", "2", "--spacetime")
    assert st.stdout.split() == ["00010000", "00110000", "01110000"]


def test_analyze_is_reproducible(tmp_path):
    args = ["analyze", "--width", "3000", "--seed", "7", "--steps", "300", "--sections", "4", "--period", "100",
            "--no-timestamp"]
    a = run(*args, "--out", tmp_path / "a.csv")
    b = run(*args, "--out", tmp_path / "b.csv")
    assert a.returncode == 0 and b.returncode == 0
    for suffix in (".csv", "_ma100.csv"):
        assert (tmp_path / f"a{suffix}").read_bytes() == (tmp_path / f"b{suffix}").read_bytes()
    text = (tmp_path / "a.csv").read_text().splitlines()
    assert "# rule: 110" in text and "# initial: random density=0.5 seed=7 generator=mt19937_64" in text
    header = next(line for line in text if not line.startswith("#"))
    assert header == "step,section_0,section_1,section_2,section_3"
    smooth = [l for l in (tmp_path / "a_ma100.csv").read_text().splitlines() if not l.startswith("#")]
    assert smooth[1].startswith("99,") and smooth[-1].startswith("300,")
    assert (tmp_path / "a.svg").read_text().startswith("<svg")


def test_analyze_region_window(tmp_path):
    result = run("analyze", "--width", "2000", "--seed", "1", "--from", "100", "--to", "250", "--region", "500:1100",
                 "--out", tmp_path / "r.csv", "--no-svg", "--no-timestamp")
    assert result.returncode == 0
    rows = [l for l in (tmp_path / "r.csv").read_text().splitlines() if not l.startswith("#")]
    assert rows[0] == "step,x500_1100"
    assert rows[1].startswith("100,") and rows[-1].startswith("250,")
    assert run("analyze", "--width", "100", "--steps", "5", "--region", "50:51", "--out", tmp_path / "z.csv").returncode == 2
    assert not (tmp_path / "z.csv").exists()


def test_plot_and_ether(tmp_path):
    run("analyze", "--width", "500", "--steps", "50", "--out", tmp_path / "p.csv", "--no-svg")
    assert run("plot", tmp_path / "p.csv", "--out", tmp_path / "p.svg").returncode == 0
    assert "<polyline" in (tmp_path / "p.svg").read_text()
    ether = run("ether", "--width", "140", "--out", tmp_path / "ether.cfg")
    assert ether.returncode == 0 and "# spatial_period: 14" in ether.stdout
    cov = run("ether", "--coverage", tmp_path / "ether.cfg")
    assert "coverage 1" in cov.stdout


def test_reproduce_paper_small(tmp_path):
    run("analyze", "--width", "10", "--steps", "0", "--out", tmp_path / "unused.csv", "--no-svg")
    cfg = tmp_path / "init.cfg"
    subprocess.run([CLI, "evolve", "--width", "2000", "--seed", "4", "--out", cfg], check=True, capture_output=True)
    result = run("reproduce-paper", cfg, "--out", tmp_path / "repro", "--steps", "300", "--period", "50",
                 "--sections", "4", "--region", "0:500", "--region", "500:500", "--from", "100", "--no-timestamp")
    assert result.returncode == 0, result.stderr
    names = sorted(p.name for p in (tmp_path / "repro").iterdir())
    assert names == sorted(f"{stem}{ext}" for stem in ("whole", "whole_ma50", "sections", "sections_ma50",
                                                        "parts", "parts_ma50") for ext in (".csv", ".svg"))
