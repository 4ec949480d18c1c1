import json
import subprocess
import sys

import pytest

from conftest import MINITAC
from entlink.cli import EXIT_BELOW_FLOOR, EXIT_DATA, EXIT_OK, EXIT_USAGE, main


@pytest.fixture(scope="module")
def workspace(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    assert main(["ingest", str(MINITAC / "kb.jsonl"), "-o", str(d / "kb.jsonl")]) == EXIT_OK
    assert main(["index", str(d / "kb.jsonl"), "-o", str(d / "kb.idx")]) == EXIT_OK
    (d / "einstein.txt").write_text("Einstein was born in Ulm.\n")
    (d / "pub.txt").write_text("John met Paul at the pub after the Beatles played in Liverpool.\n")
    return d


def kb_args(ws):
    return [str(ws / "kb.jsonl"), str(ws / "kb.idx")]


def bench_args(ws, *extra):
    return ["bench", *kb_args(ws), str(MINITAC / "queries.jsonl"), str(MINITAC / "gold.tsv"), *extra]


def test_ingest_round_trip_is_stable(workspace, tmp_path):
    assert main(["ingest", str(workspace / "kb.jsonl"), "-o", str(tmp_path / "again.jsonl")]) == EXIT_OK
    assert (tmp_path / "again.jsonl").read_bytes() == (workspace / "kb.jsonl").read_bytes()


def test_query_prints_ranked_labels(workspace, capsys):
    code = main(["query", *kb_args(workspace), "--strategy", "graph", "--name", "John",
                 "--type", "person", "--doc", str(workspace / "pub.txt")])
    assert code == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["query_id"] == "pub"
    assert out["ranked_labels"] and all({"label", "score"} <= set(r) for r in out["ranked_labels"])


def test_query_topic_strategy(workspace, capsys):
    code = main(["query", *kb_args(workspace), "--strategy", "topic", "--name", "Einstein",
                 "--doc", str(workspace / "einstein.txt"), "--seed", "3"])
    assert code == EXIT_OK
    assert json.loads(capsys.readouterr().out)["ranked_labels"]


def test_annotate(workspace, capsys):
    assert main(["annotate", *kb_args(workspace), "--text", str(workspace / "einstein.txt")]) == EXIT_OK
    assert capsys.readouterr().out == (
        "http://en.wikipedia.org/wiki/Albert_Einstein Einstein was born in "
        "http://en.wikipedia.org/wiki/Ulm Ulm.\n")


def test_bench_writes_csv(workspace, tmp_path, capsys):
    out = tmp_path / "r.csv"
    assert main(bench_args(workspace, "--strategy", "graph", "--timeout", "600", "-o", str(out))) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "query_id,strategy,correct,timed_out,runtime_s,mentions,doc_tokens"
    assert len(lines) == 42
    assert lines[-1].startswith("__summary__,graph,")
    assert "accuracy" in capsys.readouterr().err


def test_bench_fixed_clock_is_byte_identical(workspace, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(bench_args(workspace, "--strategy", "topic", "--fixed-clock", "-o", str(a))) == EXIT_OK
    assert main(bench_args(workspace, "--strategy", "topic", "--fixed-clock", "--workers", "4",
                           "-o", str(b))) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_bench_accuracy_floor(workspace, tmp_path):
    out = str(tmp_path / "r.csv")
    assert main(bench_args(workspace, "--min-accuracy", "0.99", "-o", out)) == EXIT_BELOW_FLOOR
    assert main(bench_args(workspace, "--min-accuracy", "0.5", "-o", out)) == EXIT_OK


def test_bench_to_stdout(workspace, capsys):
    assert main(bench_args(workspace, "--fixed-clock")) == EXIT_OK
    assert capsys.readouterr().out.startswith("query_id,strategy,")


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["ingest"],
    ["query", "kb", "idx", "--strategy", "oracle", "--name", "x", "--doc", "d"],
    ["bench", "kb", "idx", "q", "g", "--timeout", "0"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert "usage" in capsys.readouterr().err


def test_bad_worker_count(workspace, capsys):
    assert main(bench_args(workspace, "--workers", "0")) == EXIT_USAGE


def test_data_errors(workspace, tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text("{broken\n")
    assert main(["ingest", str(bad), "-o", str(tmp_path / "x")]) == EXIT_DATA
    assert "bad.jsonl:1:" in capsys.readouterr().err
    assert main(["index", str(tmp_path / "missing.jsonl"), "-o", str(tmp_path / "x")]) == EXIT_DATA
    assert main(["annotate", str(workspace / "kb.jsonl"), str(bad), "--text", str(bad)]) == EXIT_DATA
    gold = tmp_path / "gold.tsv"
    gold.write_text("Q01\tNIL\n")
    assert main(["bench", *kb_args(workspace), str(MINITAC / "queries.jsonl"), str(gold)]) == EXIT_DATA
    assert "no gold label" in capsys.readouterr().err


def test_module_entry_point(workspace):
    proc = subprocess.run([sys.executable, "-m", "entlink", "annotate", *kb_args(workspace),
                           "--text", str(workspace / "einstein.txt"), "--url-prefix", "kb:"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "kb:Albert_Einstein Einstein was born in kb:Ulm Ulm.\n"
    proc = subprocess.run([sys.executable, "-m", "entlink", "nope"], capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE
