"""Command line surface: formats, exit codes, determinism, file output."""

import json
import math
import os
import subprocess
import sys

import pytest

_CLI = [sys.executable, "-m", "sectorlab.cli"]


def run(*args, env_extra=None, **kwargs):
    env = dict(os.environ)
    env.pop("SECTORLAB_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(_CLI + list(args), capture_output=True, text=True,
                          env=env, **kwargs)


def test_roots_text_output():
    r = run("roots", "--coeffs", "2,-2,1")
    assert r.returncode == 0
    assert r.stdout == "1+1i (×1), 1-1i (×1)\n"
    assert "max normalized residual" in r.stderr


def test_roots_csv_output():
    r = run("roots", "--coeffs", "2,-2,1", "--format", "csv")
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "re,im,multiplicity,residual", "1,1,1,0", "1,-1,1,0"]


def test_roots_json_output():
    r = run("roots", "--coeffs", "2,-2,1", "--format", "json")
    doc = json.loads(r.stdout)
    assert doc["degree"] == 2
    assert [(z["re"], z["im"], z["multiplicity"]) for z in doc["zeros"]] == [
        (1.0, 1.0, 1), (1.0, -1.0, 1)]


def test_roots_quartet_display_order():
    # conjugates print upper-half member first, reals ascending
    r = run("roots", "--coeffs", "4,0,0,0,1")
    assert r.returncode == 0
    assert r.stdout == ("-1+1i (×1), -1-1i (×1), "
                        "1+1i (×1), 1-1i (×1)\n")


def test_roots_from_document(tmp_path):
    doc = tmp_path / "p.json"
    doc.write_text('{"roots": {"pairs": [[1.0, 1.0]]}}')
    r = run("roots", "--input", str(doc))
    assert r.returncode == 0
    assert r.stdout.startswith("1+1i")


def test_output_file_written(tmp_path):
    out = tmp_path / "zeros.csv"
    r = run("roots", "--coeffs", "2,-2,1", "--format", "csv", "-o", str(out))
    assert r.returncode == 0
    assert out.read_text().startswith("re,im,multiplicity,residual\n")


def test_input_error_exit_code():
    assert run("roots", "--coeffs", "1,,2").returncode == 1
    assert run("roots", "--coeffs", "0,0").returncode == 1
    assert run("roots").returncode == 1
    assert run("frobnicate").returncode == 1
    assert run("roots", "--coeffs", "1,1", "--format", "svg").returncode == 1


def test_hypothesis_violation_exit_code():
    r = run("apply", "--op", "cosstep:alpha=1.5,N=1",
            "--coeffs", "1,1,1,1,1,1,1")
    assert r.returncode == 3
    assert "alpha*n/N < pi/2" in r.stderr
    r = run("apply", "--op", "explicit:1,1", "--coeffs", "1,1,1")
    assert r.returncode == 3


def test_apply_gauss_collapse():
    r = run("apply", "--op", "gauss:alpha=0.832555", "--coeffs", "2,-2,1")
    assert r.returncode == 0
    lines = dict(l.split(" ", 1) for l in r.stdout.strip().splitlines())
    assert lines["operator"] == "gauss:alpha=0.832555"
    assert lines["coeffs_before"] == "2,-2,1"
    assert lines["degree_drop"] == "0"
    assert lines["theta_before"] == "0.785398163397"
    assert lines["theta_after"] == "0"
    assert lines["predicted"] == "0"
    # alpha is slightly above sqrt(ln 2), so the pair lands as two reals
    assert lines["roots_after"] == "2.82615396995 (×1), 2.83070577347 (×1)"


def test_apply_explicit_degree_drop():
    r = run("apply", "--op", "explicit:1,0", "--coeffs", "1,1")
    lines = dict(l.split(" ", 1) for l in r.stdout.strip().splitlines())
    assert lines["coeffs_after"] == "1"
    assert lines["degree_drop"] == "1"
    assert lines["theta_before"] == "n/a"


def test_apply_json_format():
    r = run("apply", "--op", "gauss:alpha=0.5", "--coeffs", "2,-2,1",
            "--format", "json")
    doc = json.loads(r.stdout)
    assert doc["operator"] == "gauss:alpha=0.5"
    assert doc["degree_drop"] == 0
    assert math.isclose(doc["theta_before"], math.pi / 4.0, rel_tol=1e-12)
    assert math.isclose(doc["predicted"], 0.6414032478174578, rel_tol=1e-12)


def test_sector_command():
    r = run("sector", "--coeffs", "2,-2,1")
    assert r.returncode == 0
    assert r.stdout == "0.785398163397\n"
    r = run("sector", "--coeffs", "4,0,0,0,1", "--double")
    assert r.stdout == "0.785398163397\n"
    # +/- i sits outside the open right half-plane
    r = run("sector", "--coeffs", "1,0,1")
    assert r.returncode == 1
    assert "right half-plane" in r.stderr


def test_verify_report_runs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        r = run("verify", "zsro", "--trials", "40", "--seed", "42",
                "-o", str(path))
        assert r.returncode == 0
        assert "worst margin" in r.stderr
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["theorem_id"] == "zsro"
    assert doc["seed"] == 42
    assert doc["counterexample"] is None


def test_verify_env_seed(tmp_path):
    out = tmp_path / "r.json"
    r = run("verify", "zsro", "--trials", "5", "-o", str(out),
            env_extra={"SECTORLAB_SEED": "99"})
    assert r.returncode == 0
    assert json.loads(out.read_text())["seed"] == 99
    # explicit flag beats the environment
    r = run("verify", "zsro", "--trials", "5", "--seed", "7", "-o", str(out),
            env_extra={"SECTORLAB_SEED": "99"})
    assert json.loads(out.read_text())["seed"] == 7
    assert run("verify", "zsro", "--trials", "5",
               env_extra={"SECTORLAB_SEED": "abc"}).returncode == 1


def test_verify_jsd_quadratic_sharpness():
    r = run("verify", "jsd", "--quadratic", "--trials", "30", "--seed", "42")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["params"]["quadratic"] is True
    assert doc["worst_margin"] >= -1e-8


def test_verify_double_sector_verdict():
    r = run("verify", "double-sector", "--trials", "5", "--seed", "1")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["verdict"] == "no reduction (as proven)"
    assert abs(doc["before"] - math.pi / 4.0) <= 1e-12
    assert abs(doc["after"] - math.pi / 4.0) <= 1e-12


def test_verify_unknown_theorem():
    assert run("verify", "nonsense", "--trials", "1").returncode == 1


def test_search_reports_diagnostics():
    r = run("search", "--op", "exppower:alpha=0.3,p=1.5", "--trials", "10",
            "--seed", "7")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["theorem_id"] == "search"
    assert doc["params"]["rn_tail_trend"] == "increasing-toward-1"
    assert doc["params"]["rn_necessary_condition"] == "fails-necessary-condition"
    assert len(doc["params"]["three_term_probe"]["ladder"]) == 13
    assert run("search", "--op", "gauss:alpha=0.5",
               "--trials", "1").returncode == 1


def test_plot_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for path in (a, b):
        r = run("plot", "--coeffs", "2,-2,1", "--alpha", "0.392699",
                "--show-discs", "-o", str(path))
        assert r.returncode == 0
    assert a.read_bytes() == b.read_bytes()
    svg = a.read_text()
    assert svg.startswith("<svg ")
    assert 'width="800" height="800"' in svg
    assert svg.count("<circle") >= 3  # disc + two zeros at least


def test_plot_requires_alpha_for_discs():
    assert run("plot", "--coeffs", "2,-2,1", "--show-discs").returncode == 1


def test_plot_left_half_plane_annotates_instead_of_failing():
    r = run("plot", "--coeffs", "1,0,1")
    assert r.returncode == 0
    assert "<svg" in r.stdout
