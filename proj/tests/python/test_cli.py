"""End-to-end checks of the command-line tool via subprocess."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("MATCHGAP_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="MATCHGAP_CLI not set")

P5_TEXT = "p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n"
P3_TEXT = "p edge 3 2\ne 1 2\ne 2 3\n"
K4_TEXT = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"


def run(*args, env=None, cwd=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=merged, cwd=cwd)


def report(proc):
    return json.loads(proc.stdout)


def test_nu_plain(tmp_path):
    f = tmp_path / "p5.col"
    f.write_text(P5_TEXT)
    proc = run("nu", str(f))
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2"


def test_gap_report_envelope(tmp_path):
    f = tmp_path / "p5.col"
    f.write_text(P5_TEXT)
    proc = run("gap", str(f))
    assert proc.returncode == 0
    rep = report(proc)
    assert rep["command"] == "gap"
    assert rep["version"] == "0.1.0"
    assert len(rep["input_digest"]) == 16
    assert isinstance(rep["timing_ms"], int)
    payload = rep["payload"]
    assert (payload["nu"], payload["L"], payload["l"]) == (2, 2, 1)
    # vertex labels are 1-based, matching the file format
    assert payload["F_L"] == [[1, 2], [3, 4]]
    assert payload["F_l"] == [[1, 2], [4, 5]]

    again = report(run("gap", str(f)))
    rep.pop("timing_ms")
    again.pop("timing_ms")
    assert rep == again


def test_check_2l_verdicts(tmp_path):
    good = tmp_path / "p5.col"
    good.write_text(P5_TEXT)
    proc = run("check-2l", str(good))
    assert proc.returncode == 0
    assert report(proc)["payload"]["verdict"] is True

    bad = tmp_path / "p3.col"
    bad.write_text(P3_TEXT)
    proc = run("check-2l", str(bad))
    assert proc.returncode == 1
    payload = report(proc)["payload"]
    assert payload["verdict"] is False
    assert payload["failed_condition"] == 2


def test_check_2l_cross_check_disagreement(tmp_path):
    f = tmp_path / "twt.col"
    f.write_text("p edge 5 5\ne 1 2\ne 1 3\ne 1 5\ne 2 3\ne 2 4\n")
    proc = run("check-2l", str(f), "--cross-check")
    assert proc.returncode == 1
    payload = report(proc)["payload"]
    assert payload["verdict"] is False
    assert payload["cross_check"] == {"L": 2, "l": 1, "agrees": False}
    assert "disagree" in proc.stderr


def test_verify_sections(tmp_path):
    f = tmp_path / "p5.col"
    f.write_text(P5_TEXT)
    proc = run("verify", str(f))
    assert proc.returncode == 0
    payload = report(proc)["payload"]
    assert payload["ok"] is True
    assert payload["pairwise"]["L"] == 2
    assert payload["perfect_matching"]["applicable"] is False
    assert payload["extremal"]["applicable"] is True


def test_inflate_and_downstream(tmp_path):
    base = tmp_path / "k4.col"
    base.write_text(K4_TEXT)
    out = tmp_path / "k4_inflated.col"
    proc = run("inflate", str(base), "-o", str(out))
    assert proc.returncode == 0
    payload = report(proc)["payload"]
    assert (payload["vertices"], payload["edges"]) == (12, 18)

    census = report(run("two-factors", str(out)))["payload"]
    assert (census["count"], census["w"], census["W"]) == (8, 0, 4)

    proc = run("color3", str(out))
    assert proc.returncode == 0
    assert report(proc)["payload"]["colorable"] is True

    reduce_rep = report(run("reduce-check", str(base)))["payload"]
    assert reduce_rep["consistent"] is True
    assert (reduce_rep["L"], reduce_rep["l"]) == (6, 4)


def test_gen_deterministic(tmp_path):
    a, b = tmp_path / "a.col", tmp_path / "b.col"
    rep_a = report(run("gen", "gnp", "--n", "8", "--p", "0.4", "--seed", "42", "-o", str(a)))
    rep_b = report(run("gen", "gnp", "--n", "8", "--p", "0.4", "--seed", "42", "-o", str(b)))
    assert a.read_text() == b.read_text()
    assert rep_a["seed"] == 42
    assert rep_a["payload"]["p"] == "0.4"
    assert rep_a["input_digest"] == rep_b["input_digest"]

    c = tmp_path / "c.col"
    rep_c = report(run("gen", "cubic", "--n", "4", "--seed", "1", "-o", str(c)))
    assert rep_c["payload"]["edges"] == 6
    assert c.read_text().startswith("p edge 4 6\n")


def test_exit_codes(tmp_path):
    assert run("--help").returncode == 0
    assert run("bogus").returncode == 2
    assert run("gap").returncode == 2
    assert run("nu", str(tmp_path / "missing.col")).returncode == 3

    big = tmp_path / "big.col"
    run("gen", "cubic", "--n", "30", "--seed", "7", "-o", str(big))
    assert run("gap", str(big)).returncode == 4
    assert run("gap", str(big), "--force").returncode == 0
    assert run("gap", str(big), env={"MATCHGAP_ORACLE_LIMIT": "30"}).returncode == 0

    cubic_only = tmp_path / "p3.col"
    cubic_only.write_text(P3_TEXT)
    assert run("inflate", str(cubic_only), "-o", str(tmp_path / "out.col")).returncode == 3
