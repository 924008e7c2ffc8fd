import json
import subprocess
import sys


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "qtetra.cli", *args],
        capture_output=True,
        text=True,
        timeout=600,
    )


def test_z_element_golden():
    r = run_cli("z", "element", "0", "1", "1", "2", "0", "0", "3", "1")
    assert r.returncode == 0
    assert r.stdout.strip() == "(s^8 + 2*s^10 + 2*s^12 + 2*s^14 + s^16)"


def test_build_vacuum_block():
    r = run_cli("build", "R", "--block", "0", "0")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    rec = json.loads(lines[1])
    assert rec == {"out": [0, 0, 0], "in": [0, 0, 0], "coeff": "(1)"}


def test_build_text_format():
    r = run_cli("build", "L", "--block", "1", "1", "--format", "text")
    assert r.returncode == 0
    assert "L[0,1,0 -> 0,1,0] = (-s^2)" in r.stdout


def test_verify_pass_and_report(tmp_path):
    rep = tmp_path / "out.json"
    r = run_cli("verify", "TE_KV94", "--bound", "1", "--report", str(rep))
    assert r.returncode == 0
    assert "pass" in r.stdout
    data = json.loads(rep.read_text())
    assert data["outcome"] == "pass"


def test_verify_unknown_name_usage_error():
    r = run_cli("verify", "TE_NOPE")
    assert r.returncode == 2


def test_usage_error_exit_code():
    r = run_cli("build")
    assert r.returncode == 2
    r = run_cli("verify", "TE_KV94", "--bound", "-1")
    assert r.returncode == 2


def test_pbw_derive():
    r = run_cli("pbw", "derive", "--diagram", "A:ox", "--weight", "1", "1", "0")
    assert r.returncode == 0
    assert "gamma[1,1,0 -> 1,1,0] = (1)" in r.stdout


def test_crystal_dump():
    r = run_cli("crystal", "L", "--block", "1", "1")
    assert r.returncode == 0
    assert "cL[0,1,0 -> 1,0,1] = +1" in r.stdout


def test_jobs_do_not_change_output():
    a = run_cli("verify", "TE_BS06", "--bound", "1", "--jobs", "1")
    b = run_cli("verify", "TE_BS06", "--bound", "1", "--jobs", "2")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_determinism_across_runs():
    a = run_cli("build", "X", "--block", "3", "2")
    b = run_cli("build", "X", "--block", "3", "2")
    assert a.stdout == b.stdout and a.returncode == 0


def test_z_block_dump():
    r = run_cli("z", "block", "--block", "1", "2")
    assert r.returncode == 0
    recs = [json.loads(l) for l in r.stdout.strip().splitlines()]
    assert recs[0]["family"] == "Z"
    assert all("coeff" in rec for rec in recs[1:])


def test_build_out_file(tmp_path):
    path = tmp_path / "dump.jsonl"
    r = run_cli("build", "N", "--block", "2", "2", "--out", str(path))
    assert r.returncode == 0
    lines = path.read_text().strip().splitlines()
    assert json.loads(lines[0])["family"] == "N"


def test_selftest_command():
    r = run_cli("selftest")
    assert r.returncode == 0
    assert "golden Z examples: ok" in r.stdout
