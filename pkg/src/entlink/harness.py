"""Benchmark runner: accuracy scoring, per-query timing and CSV reports."""
from __future__ import annotations

import csv
import json
import math
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence

from .deadline import Clock, Deadline
from .errors import DumpFormatError, InsufficientDataError, MissingGoldError, QueryTimeout
from .graph_ned import GraphConfig, disambiguate_document
from .index import InvertedIndex
from .kb import NIL, DisambiguationResult, KnowledgeBase, PathLike, Query
from .textproc import spot_mentions, terms
from .topic_ned import Hyperparameters, TopicConfig, disambiguate_query

STRATEGIES = ("graph", "topic")
DEFAULT_TIMEOUT_S = 600.0
CSV_HEADER = ("query_id", "strategy", "correct", "timed_out", "runtime_s", "mentions", "doc_tokens")
SUMMARY_ID = "__summary__"


@dataclass(frozen=True)
class QueryOutcome:
    query_id: str
    predicted: tuple[str, ...]
    gold: str
    correct: bool
    runtime_s: float
    timed_out: bool
    mention_count: int
    doc_token_count: int


@dataclass
class BenchReport:
    strategy: str
    per_query: list[QueryOutcome] = field(default_factory=list)

    @property
    def accuracy(self) -> float:
        if not self.per_query:
            return 0.0
        return sum(o.correct for o in self.per_query) / len(self.per_query)


@dataclass(frozen=True)
class RegressionFit:
    slope: float
    intercept: float
    r: float


def _check_strategy(strategy: str) -> None:
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")


def score_query(predicted: DisambiguationResult, gold_label: str, strategy: str) -> bool:
    """Graph results count if any assigned entity matches; topic results need the top label."""
    _check_strategy(strategy)
    if strategy == "graph":
        assigned = predicted.assigned_entities()
        if gold_label == NIL:
            return not assigned
        return gold_label in assigned
    return predicted.top_label == gold_label


def predicted_labels(result: DisambiguationResult, strategy: str) -> tuple[str, ...]:
    if strategy == "graph":
        return tuple(sorted(result.assigned_entities())) or (NIL,)
    return (result.top_label,)


def run_query(
    kb: KnowledgeBase,
    index: InvertedIndex,
    query: Query,
    strategy: str,
    deadline: Deadline,
    *,
    seed: int = 0,
    graph_config: GraphConfig = GraphConfig(),
    topic_config: TopicConfig = TopicConfig(),
    hp: Hyperparameters = Hyperparameters(),
) -> DisambiguationResult:
    """Run one strategy on one query.

    The graph strategy links every mention spotted in the document; the query
    name is not injected, so documents without KB aliases come out as NIL.
    """
    _check_strategy(strategy)
    if strategy == "graph":
        return disambiguate_document(
            kb, index, query.context_document, graph_config,
            query_id=query.query_id, deadline=deadline,
        )
    return disambiguate_query(kb, index, query, hp, topic_config, seed=seed, deadline=deadline)


def _evaluate(kb, index, query, gold, strategy, timeout_s, clock, options) -> QueryOutcome:
    mentions = len(spot_mentions(query.context_document, kb.alias_table))
    tokens = len(terms(query.context_document))
    deadline = Deadline(timeout_s, clock)
    try:
        result = run_query(kb, index, query, strategy, deadline, **options)
        timed_out = False
    except QueryTimeout:
        result, timed_out = None, True
    runtime = deadline.elapsed()
    # A stage that overran without reaching a checkpoint is flagged afterwards.
    if timeout_s is not None and runtime > timeout_s:
        timed_out = True
    if timed_out:
        return QueryOutcome(query.query_id, (), gold, False, runtime, True, mentions, tokens)
    return QueryOutcome(
        query.query_id,
        predicted_labels(result, strategy),
        gold,
        score_query(result, gold, strategy),
        runtime,
        False,
        mentions,
        tokens,
    )


def run_benchmark(
    kb: KnowledgeBase,
    index: InvertedIndex,
    queries: Sequence[Query],
    gold: Mapping[str, str],
    strategy: str,
    timeout_s: Optional[float] = DEFAULT_TIMEOUT_S,
    *,
    workers: int = 1,
    clock: Clock = time.perf_counter,
    seed: int = 0,
    graph_config: GraphConfig = GraphConfig(),
    topic_config: TopicConfig = TopicConfig(),
    hp: Hyperparameters = Hyperparameters(),
) -> BenchReport:
    _check_strategy(strategy)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if timeout_s is not None and timeout_s <= 0:
        raise ValueError("timeout_s must be positive")
    missing = {q.query_id for q in queries} - set(gold)
    if missing:
        raise MissingGoldError(missing)

    options = dict(seed=seed, graph_config=graph_config, topic_config=topic_config, hp=hp)

    def job(q: Query) -> QueryOutcome:
        return _evaluate(kb, index, q, gold[q.query_id], strategy, timeout_s, clock, options)

    if workers == 1:
        outcomes = [job(q) for q in queries]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(job, queries))
    outcomes.sort(key=lambda o: o.query_id)
    return BenchReport(strategy, outcomes)


def runtime_regression(report: BenchReport) -> RegressionFit:
    """Least-squares line of runtime against mentions (graph) or document tokens (topic).

    ``r`` is NaN when either variable is constant.
    """
    points = [o for o in report.per_query if not o.timed_out]
    if len(points) < 3:
        raise InsufficientDataError(f"need at least 3 completed queries, got {len(points)}")
    if report.strategy == "graph":
        xs = [float(o.mention_count) for o in points]
    else:
        xs = [float(o.doc_token_count) for o in points]
    ys = [o.runtime_s for o in points]
    if len(set(xs)) == 1:
        raise InsufficientDataError("runtime regression needs at least two distinct sizes")
    slope, intercept = statistics.linear_regression(xs, ys)
    r = math.nan if len(set(ys)) == 1 else statistics.correlation(xs, ys)
    return RegressionFit(slope, intercept, r)


def _fmt_time(x: float) -> str:
    return f"{x:.6f}"


def report_rows(report: BenchReport) -> list[list[str]]:
    rows = [list(CSV_HEADER)]
    ordered = sorted(report.per_query, key=lambda o: o.query_id)
    for o in ordered:
        rows.append([
            o.query_id, report.strategy, str(int(o.correct)), str(int(o.timed_out)),
            _fmt_time(o.runtime_s), str(o.mention_count), str(o.doc_token_count),
        ])
    # Summary: the correct column carries accuracy, the others are totals.
    rows.append([
        SUMMARY_ID, report.strategy, repr(report.accuracy),
        str(sum(o.timed_out for o in ordered)),
        _fmt_time(sum(o.runtime_s for o in ordered)),
        str(sum(o.mention_count for o in ordered)),
        str(sum(o.doc_token_count for o in ordered)),
    ])
    return rows


def emit_report(report: BenchReport, path: PathLike) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        csv.writer(fh, lineterminator="\n").writerows(report_rows(report))


def load_queries(path: PathLike) -> list[Query]:
    """Read ``{query_id, type, name, doc}`` records, one JSON object per line."""
    path = Path(path)
    queries: list[Query] = []
    seen: set[str] = set()
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DumpFormatError(path, line_no, f"invalid JSON ({exc.msg})") from exc
            if not isinstance(row, dict):
                raise DumpFormatError(path, line_no, "record is not an object")
            for key in ("query_id", "type", "name", "doc"):
                if not isinstance(row.get(key), str):
                    raise DumpFormatError(path, line_no, f"field {key!r} must be a string")
            if row["query_id"] in seen:
                raise DumpFormatError(path, line_no, f"duplicate query id {row['query_id']!r}")
            seen.add(row["query_id"])
            try:
                queries.append(Query(row["query_id"], row["type"], row["name"], row["doc"]))
            except ValueError as exc:
                raise DumpFormatError(path, line_no, str(exc)) from exc
    return queries


def load_gold(path: PathLike) -> dict[str, str]:
    """Read ``query_id<TAB>label`` lines."""
    path = Path(path)
    gold: dict[str, str] = {}
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise DumpFormatError(path, line_no, "expected 'query_id<TAB>label'")
            if parts[0] in gold:
                raise DumpFormatError(path, line_no, f"duplicate query id {parts[0]!r}")
            gold[parts[0]] = parts[1]
    return gold
