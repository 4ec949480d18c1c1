"""Record the reference pipeline's results on the mini benchmark in expected.json.

Usage: python tools/freeze_expected.py tests/fixtures/minitac

Re-run only after reviewing the per-query predictions it prints.
"""
import json
import sys
from pathlib import Path

from entlink.deadline import frozen_clock
from entlink.harness import load_gold, load_queries, run_benchmark
from entlink.index import build_index
from entlink.kb import load_dump

SEED = 0


def main(fixture_dir):
    d = Path(fixture_dir)
    kb = load_dump(d / "kb.jsonl")
    index = build_index(kb)
    queries = load_queries(d / "queries.jsonl")
    gold = load_gold(d / "gold.tsv")
    expected = {"seed": SEED}
    for strategy in ("graph", "topic"):
        report = run_benchmark(kb, index, queries, gold, strategy, None, clock=frozen_clock, seed=SEED)
        expected[strategy] = {
            "accuracy": report.accuracy,
            "predictions": {o.query_id: list(o.predicted) for o in report.per_query},
        }
        for o in report.per_query:
            mark = "ok " if o.correct else "MISS"
            print(f"{strategy:5} {mark} {o.query_id} gold={o.gold} predicted={','.join(o.predicted)}")
        print(f"{strategy} accuracy {report.accuracy:.3f}")
    (d / "expected.json").write_text(json.dumps(expected, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/minitac")
