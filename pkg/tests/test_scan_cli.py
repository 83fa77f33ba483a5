"""Streaming scans, checkpoint resume determinism, CLI surface."""

import csv
import io
import json
import subprocess
import sys

import pytest

from subtrees import generate_connected, to_graph6
from subtrees.scan import ScanError, load_state, scan


def universe_lines(n: int) -> list[str]:
    return [to_graph6(g) + "\n" for g in generate_connected(n)]


def read_jsonl_no_runtime(path) -> list[dict]:
    records = []
    with open(path) as fh:
        for line in fh:
            record = json.loads(line)
            record.pop("runtime_ms")
            records.append(record)
    return records


def test_scan_basic_counts(tmp_path):
    out = tmp_path / "out.jsonl"
    state = scan(universe_lines(5), ["min-path"], str(out))
    assert state.consumed == 21
    assert state.tallies == {"min-path": {"holds": 21, "fails": 0, "report-only": 0}}
    assert state.violations == []
    records = read_jsonl_no_runtime(out)
    assert len(records) == 21
    assert all(r["status"] == "holds" for r in records)


def test_scan_empty_stream(tmp_path):
    out = tmp_path / "out.jsonl"
    state = scan([], ["min-path"], str(out))
    assert state.consumed == 0
    assert state.tallies == {}
    assert out.read_text() == ""


def test_scan_malformed_line_reports_lineno(tmp_path):
    lines = ["Bw\n", "Bw\n", "not graph6 ???\n"]
    with pytest.raises(ScanError, match="line 3"):
        scan(lines, ["min-path"], str(tmp_path / "out.jsonl"))


def test_scan_unknown_check(tmp_path):
    with pytest.raises(ScanError, match="unknown checks"):
        scan(["Bw\n"], ["no-such-check"], str(tmp_path / "out.jsonl"))


def test_scan_resume_matches_single_pass(tmp_path):
    lines = universe_lines(6)
    checks = ["min-path", "max-clique", "mean-vs-average"]

    single_out = tmp_path / "single.jsonl"
    single = scan(lines, checks, str(single_out), checkpoint_path=str(tmp_path / "s.json"))

    part_out = tmp_path / "part.jsonl"
    ckpt = tmp_path / "part.json"
    scan(lines, checks, str(part_out), checkpoint_path=str(ckpt), checkpoint_every=25, limit=60)
    mid_state = load_state(str(ckpt))
    assert 0 < mid_state.consumed < len(lines)
    resumed = scan(lines, checks, str(part_out), checkpoint_path=str(ckpt), checkpoint_every=25)

    assert resumed.consumed == single.consumed == 112
    assert resumed.tallies_json() == single.tallies_json()
    assert read_jsonl_no_runtime(part_out) == read_jsonl_no_runtime(single_out)


def test_scan_resume_after_unsynced_tail(tmp_path):
    # records written after the last checkpoint are truncated and replayed
    lines = universe_lines(5)
    checks = ["min-path"]
    single_out = tmp_path / "single.jsonl"
    single = scan(lines, checks, str(single_out))

    out = tmp_path / "out.jsonl"
    ckpt = tmp_path / "c.json"
    scan(lines, checks, str(out), checkpoint_path=str(ckpt), checkpoint_every=10, limit=17)
    state = load_state(str(ckpt))
    assert state.consumed == 17  # final save includes the tail here
    # simulate a crash where the state file lags behind the output
    state.consumed = 10
    state.output_bytes = min(state.output_bytes, _offset_of_line(out, 10))
    from subtrees.scan import save_state

    save_state(state, str(ckpt))
    resumed = scan(lines, checks, str(out), checkpoint_path=str(ckpt))
    assert resumed.tallies_json() != ""
    assert read_jsonl_no_runtime(out) == read_jsonl_no_runtime(single_out)


def _offset_of_line(path, k: int) -> int:
    offset = 0
    with open(path, "rb") as fh:
        for _ in range(k):
            offset += len(fh.readline())
    return offset


def test_scan_checkpoint_check_mismatch(tmp_path):
    out = tmp_path / "out.jsonl"
    ckpt = tmp_path / "c.json"
    scan(universe_lines(4), ["min-path"], str(out), checkpoint_path=str(ckpt))
    with pytest.raises(ScanError, match="checkpoint"):
        scan(universe_lines(4), ["max-clique"], str(out), checkpoint_path=str(ckpt))


def test_scan_checkpoint_without_output(tmp_path):
    out = tmp_path / "out.jsonl"
    ckpt = tmp_path / "c.json"
    scan(universe_lines(4), ["min-path"], str(out), checkpoint_path=str(ckpt), limit=3)
    out.unlink()
    with pytest.raises(ScanError, match="output"):
        scan(universe_lines(4), ["min-path"], str(out), checkpoint_path=str(ckpt))


def test_scan_parallel_matches_serial(tmp_path):
    lines = universe_lines(5)
    serial_out = tmp_path / "serial.jsonl"
    parallel_out = tmp_path / "parallel.jsonl"
    serial = scan(lines, ["min-path", "ratio-chain"], str(serial_out), jobs=1)
    parallel = scan(lines, ["min-path", "ratio-chain"], str(parallel_out), jobs=2)
    assert serial.tallies_json() == parallel.tallies_json()
    assert read_jsonl_no_runtime(serial_out) == read_jsonl_no_runtime(parallel_out)


# -- CLI ------------------------------------------------------------------------


def run_cli(*args: str, stdin: str | None = None) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "subtrees.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
    )


def test_cli_compute_family_and_graph6():
    r = run_cli("compute", "family:path:5")
    assert r.returncode == 0
    assert "7/3" in r.stdout
    r = run_cli("compute", "family:clique:4")
    assert r.returncode == 0
    assert "38" in r.stdout and "58/19" in r.stdout
    r = run_cli("compute", "Bw")
    assert r.returncode == 0
    assert "2/1" in r.stdout
    r = run_cli("compute", "-", stdin="Bw\n")
    assert r.returncode == 0


def test_cli_compute_local_means():
    r = run_cli("compute", "family:path:3", "--vertex", "1", "--edge", "0,1",
                "--tree", "0,1:0-1")
    assert r.returncode == 0
    assert "mean_at_vertex_1" in r.stdout and "2/1" in r.stdout


def test_cli_compute_jsonl_and_csv_match():
    j = run_cli("compute", "family:cycle:5", "--format", "jsonl")
    c = run_cli("compute", "family:cycle:5", "--format", "csv")
    assert j.returncode == 0 and c.returncode == 0
    payload = json.loads(j.stdout)
    rows = list(csv.reader(io.StringIO(c.stdout)))
    assert rows[0] == ["stat", "exact", "float"]
    for stat, exact, float_str in rows[1:]:
        assert payload[stat]["exact"] == exact


def test_cli_compute_errors():
    assert run_cli("compute", "family:barbell:14").returncode == 2
    assert run_cli("compute", "zz-not-graph6-??").returncode == 2
    r = run_cli("compute", "family:path:0")
    assert r.returncode == 2
    # disconnected input: the mean is undefined
    from subtrees import Graph

    g6 = to_graph6(Graph.from_edges(4, [(0, 1), (2, 3)]))
    r = run_cli("compute", g6)
    assert r.returncode == 2 and "disconnected" in r.stderr


def test_cli_generate():
    r = run_cli("generate", "4")
    assert r.returncode == 0
    assert len(r.stdout.strip().splitlines()) == 6


def test_cli_scan_stdin_and_n(tmp_path):
    r = run_cli("scan", "--n", "6", "--checks", "min-path", "--jobs", "1")
    assert r.returncode == 0
    assert len(r.stdout.strip().splitlines()) == 112
    tallies = json.loads(r.stderr.strip().splitlines()[-1])
    assert tallies["tallies"]["min-path"]["holds"] == 112

    lines = "".join(universe_lines(4))
    r = run_cli("scan", "-", "--checks", "min-path,max-clique", "--jobs", "1", stdin=lines)
    assert r.returncode == 0
    assert len(r.stdout.strip().splitlines()) == 12


def test_cli_scan_csv_matches_jsonl(tmp_path):
    jr = run_cli("scan", "--n", "4", "--checks", "min-path", "--jobs", "1")
    cr = run_cli("scan", "--n", "4", "--checks", "min-path", "--jobs", "1", "--format", "csv")
    assert jr.returncode == 0 and cr.returncode == 0
    json_records = [json.loads(line) for line in jr.stdout.strip().splitlines()]
    rows = list(csv.reader(io.StringIO(cr.stdout)))
    header = rows[0]
    assert set(header) == {"check", "graph", "status", "mu", "mu_float", "runtime_ms", "witness"}
    assert len(rows) - 1 == len(json_records)
    for row, record in zip(rows[1:], json_records):
        data = dict(zip(header, row))
        assert data["check"] == record["check"]
        assert data["graph"] == record["graph"]
        assert data["status"] == record["status"]
        assert json.loads(data["witness"]) == record["witness"]
        assert data["mu"] == ("" if record["mu"] is None else record["mu"])


def test_cli_scan_malformed_input(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("Bw\n???bad???\n")
    r = run_cli("scan", str(bad), "--checks", "min-path", "--jobs", "1")
    assert r.returncode == 3
    assert "line 2" in r.stderr


def test_cli_scan_missing_input_file():
    r = run_cli("scan", "/nonexistent/file.g6", "--checks", "min-path")
    assert r.returncode == 3


def test_cli_scan_checkpoint_resume(tmp_path):
    out = tmp_path / "out.jsonl"
    ckpt = tmp_path / "state.json"
    src = tmp_path / "graphs.g6"
    src.write_text("".join(universe_lines(5)))
    args = [
        "scan", str(src), "--checks", "min-path", "--jobs", "1",
        "--output", str(out), "--checkpoint", str(ckpt), "--checkpoint-every", "5",
    ]
    r = run_cli(*args, "--limit", "12")
    assert r.returncode == 0
    partial = json.loads(r.stderr.strip().splitlines()[-1])
    assert partial["consumed"] == 12
    r = run_cli(*args)
    assert r.returncode == 0
    final = json.loads(r.stderr.strip().splitlines()[-1])
    assert final["consumed"] == 21
    assert final["tallies"]["min-path"]["holds"] == 21
    assert len(read_jsonl_no_runtime(out)) == 21


def test_cli_repro_exit_codes():
    r = run_cli("repro", "join-deletion-2-6")
    assert r.returncode == 0
    assert "REPRODUCED" in r.stdout
    r = run_cli("repro", "definitely-not-a-repro")
    assert r.returncode == 2
    r = run_cli("repro", "dbstar-23-8-local")  # slow wants --slow
    assert r.returncode == 2


def test_cli_usage_errors():
    assert run_cli().returncode == 2
    assert run_cli("scan").returncode == 2  # missing --checks
