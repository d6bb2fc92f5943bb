"""End-to-end command line checks through real subprocesses."""

import json
import subprocess
import sys

BASE = [sys.executable, "-m", "macmahon"]


def run_cli(*args):
    return subprocess.run(
        BASE + list(args), capture_output=True, text=True, timeout=120
    )


def test_map_text():
    res = run_cli("map", "--p", "2", "--a", "1", "--r", "1", "--partition", "2^2,1^3")
    assert res.returncode == 0
    assert res.stdout == "4,3\n"
    assert res.stderr == ""


def test_map_json():
    res = run_cli(
        "map", "--p", "2", "--a", "1", "--r", "1",
        "--partition", "2^2,1^3", "--format", "json",
    )
    assert res.returncode == 0
    assert json.loads(res.stdout) == {"parts": [[4, 1], [3, 1]]}


def test_unmap_text():
    res = run_cli("unmap", "--p", "2", "--a", "1", "--r", "1", "--partition", "4,3")
    assert res.returncode == 0
    assert res.stdout == "2^2,1^3\n"


def test_map_unmap_roundtrip_through_text():
    mapped = run_cli(
        "map", "--p", "3", "--a", "2", "--r", "1", "--partition", "7^5,2^6"
    )
    assert mapped.returncode == 0
    back = run_cli(
        "unmap", "--p", "3", "--a", "2", "--r", "1",
        "--partition", mapped.stdout.strip(),
    )
    assert back.returncode == 0
    assert back.stdout == "7^5,2^6\n"


def test_member():
    yes = run_cli(
        "member", "--p", "2", "--a", "1", "--r", "1",
        "--family", "A", "--partition", "2^2,1^3",
    )
    assert (yes.returncode, yes.stdout) == (0, "true\n")
    no = run_cli(
        "member", "--p", "2", "--a", "1", "--r", "1",
        "--family", "B", "--partition", "1",
    )
    assert (no.returncode, no.stdout) == (0, "false\n")


def test_count_text():
    res = run_cli(
        "count", "--p", "2", "--a", "1", "--r", "1",
        "--family", "A", "--max-n", "6",
    )
    assert res.returncode == 0
    assert res.stdout == "0,1\n1,0\n2,1\n3,1\n4,2\n5,1\n6,4\n"


def test_count_methods_agree():
    enum = run_cli(
        "count", "--p", "3", "--a", "1", "--r", "1",
        "--family", "B", "--max-n", "12", "--format", "json",
    )
    series = run_cli(
        "count", "--p", "3", "--a", "1", "--r", "1",
        "--family", "B", "--max-n", "12", "--method", "series", "--format", "json",
    )
    assert enum.returncode == 0 and series.returncode == 0
    assert json.loads(enum.stdout) == json.loads(series.stdout)


def test_series_subcommand():
    res = run_cli(
        "series", "--p", "2", "--a", "1", "--r", "1", "--side", "B", "--n", "6"
    )
    assert res.returncode == 0
    assert res.stdout == "0,1\n1,0\n2,1\n3,1\n4,2\n5,1\n6,4\n"
    as_json = run_cli(
        "series", "--p", "2", "--a", "1", "--r", "1",
        "--side", "A", "--n", "6", "--format", "json",
    )
    assert json.loads(as_json.stdout) == [
        [0, 1], [1, 0], [2, 1], [3, 1], [4, 2], [5, 1], [6, 4],
    ]


def test_verify_text():
    res = run_cli("verify", "--p", "2", "--a", "1", "--r", "1", "--max-n", "8")
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "n,count_a,count_b,roundtrip,weight,membership,collision"
    assert len(lines) == 11  # header + 9 rows + verdict
    assert lines[-1] == "pass"


def test_verify_json_and_jobs():
    serial = run_cli(
        "verify", "--p", "2", "--a", "1", "--r", "1",
        "--max-n", "10", "--format", "json",
    )
    parallel = run_cli(
        "verify", "--p", "2", "--a", "1", "--r", "1",
        "--max-n", "10", "--format", "json", "--jobs", "2",
    )
    assert serial.returncode == 0 and parallel.returncode == 0
    assert serial.stdout == parallel.stdout
    doc = json.loads(serial.stdout)
    assert doc["pass"] is True
    assert doc["params"]["M"] == 3
    assert len(doc["per_n"]) == 11


def test_output_is_deterministic():
    args = (
        "verify", "--p", "3", "--a", "2", "--r", "1",
        "--max-n", "9", "--format", "json",
    )
    assert run_cli(*args).stdout == run_cli(*args).stdout


def test_domain_errors_exit_2():
    bad_params = run_cli("map", "--p", "4", "--a", "2", "--r", "1", "--partition", "1")
    assert bad_params.returncode == 2
    assert bad_params.stdout == ""
    assert "gcd" in bad_params.stderr

    not_in_family = run_cli(
        "map", "--p", "2", "--a", "1", "--r", "1", "--partition", "4"
    )
    assert not_in_family.returncode == 2
    assert "minimum 3" in not_in_family.stderr

    forbidden = run_cli(
        "unmap", "--p", "2", "--a", "1", "--r", "1", "--partition", "1"
    )
    assert forbidden.returncode == 2
    assert "forbidden" in forbidden.stderr

    malformed = run_cli(
        "map", "--p", "2", "--a", "1", "--r", "1", "--partition", "2^^3"
    )
    assert malformed.returncode == 2
    assert "error:" in malformed.stderr


def test_caps_guard_resource_use():
    over_enum = run_cli(
        "count", "--p", "2", "--a", "1", "--r", "1", "--family", "A", "--max-n", "61"
    )
    assert over_enum.returncode == 2
    assert "cap" in over_enum.stderr

    over_series = run_cli(
        "series", "--p", "2", "--a", "1", "--r", "1", "--side", "B", "--n", "2001"
    )
    assert over_series.returncode == 2
    assert "cap" in over_series.stderr

    lowered = run_cli(
        "count", "--p", "2", "--a", "1", "--r", "1",
        "--family", "A", "--max-n", "10", "--cap", "5",
    )
    assert lowered.returncode == 2

    within = run_cli(
        "count", "--p", "2", "--a", "1", "--r", "1",
        "--family", "A", "--max-n", "10", "--cap", "10",
    )
    assert within.returncode == 0


def test_usage_errors_exit_2():
    missing = run_cli("map", "--p", "2", "--a", "1", "--r", "1")
    assert missing.returncode == 2
    assert "usage" in missing.stderr.lower()

    unknown = run_cli("frobnicate", "--p", "2", "--a", "1", "--r", "1")
    assert unknown.returncode == 2
