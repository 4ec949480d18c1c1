"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 data error, 3 benchmark accuracy
below ``--min-accuracy``.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .config import AppConfig, load_config
from .deadline import Deadline, frozen_clock
from .errors import ConfigError, EntLinkError
from .graph_ned import annotate_text
from .harness import DEFAULT_TIMEOUT_S, STRATEGIES, emit_report, load_gold, load_queries, report_rows, run_benchmark
from .index import build_index, check_index, load_index, save_index
from .kb import load_dump, save_kb
from .pipeline import disambiguate_text

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_BELOW_FLOOR = 0, 1, 2, 3

log = logging.getLogger("entlink")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(value: str) -> float:
    x = float(value)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return x


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="entlink", description="Named-entity disambiguation toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    s = sub.add_parser("ingest", help="validate a KB dump and write it in normalized form")
    s.add_argument("dump")
    s.add_argument("-o", "--output", required=True)

    s = sub.add_parser("index", help="build the TF-IDF index for a KB")
    s.add_argument("kb")
    s.add_argument("-o", "--output", required=True)

    def common(s):
        s.add_argument("kb")
        s.add_argument("index")
        s.add_argument("--config", help="YAML file with graph/topic/hyperparameters sections")

    s = sub.add_parser("query", help="disambiguate one query and print ranked labels as JSON")
    common(s)
    s.add_argument("--strategy", choices=STRATEGIES, default="graph")
    s.add_argument("--name", required=True)
    s.add_argument("--type", default="unknown")
    s.add_argument("--doc", required=True, help="file holding the query document")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--timeout", type=_positive, default=None)

    s = sub.add_parser("annotate", help="print text with each linked mention prefixed by its URL")
    common(s)
    s.add_argument("--text", required=True, help="file holding the text")
    s.add_argument("--url-prefix", default="http://en.wikipedia.org/wiki/")

    s = sub.add_parser("bench", help="run a benchmark and write a CSV report")
    common(s)
    s.add_argument("queries")
    s.add_argument("gold")
    s.add_argument("--strategy", choices=STRATEGIES, default="graph")
    s.add_argument("--timeout", type=_positive, default=DEFAULT_TIMEOUT_S)
    s.add_argument("-o", "--output", help="CSV path (default: stdout)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--min-accuracy", type=float, default=None,
                   help="exit with status 3 when accuracy falls below this value")
    s.add_argument("--fixed-clock", action="store_true",
                   help="record every runtime as 0 so reports are byte-identical across runs")

    s = sub.add_parser("serve", help="start the HTTP service")
    s.add_argument("config")
    return p


def _load(args) -> tuple:
    kb = load_dump(args.kb)
    index = load_index(args.index)
    check_index(index, kb)
    config = load_config(args.config) if args.config else AppConfig()
    return kb, index, config


def _cmd_ingest(args) -> int:
    kb = load_dump(args.dump)
    save_kb(kb, args.output)
    print(f"{kb.total_entities} entities, {len(kb.warnings)} warnings -> {args.output}", file=sys.stderr)
    return EXIT_OK


def _cmd_index(args) -> int:
    kb = load_dump(args.kb)
    index = build_index(kb)
    save_index(index, args.output)
    print(f"{index.num_docs} documents, {len(index.postings)} terms -> {args.output}", file=sys.stderr)
    return EXIT_OK


def _cmd_query(args) -> int:
    kb, index, config = _load(args)
    doc = Path(args.doc).read_text(encoding="utf-8")
    result = disambiguate_text(
        kb, index, doc, args.strategy,
        name=args.name, query_type=args.type, query_id=Path(args.doc).stem, seed=args.seed,
        deadline=Deadline(args.timeout),
        graph_config=config.graph, topic_config=config.topic, hp=config.hyperparameters,
    )
    print(json.dumps(result.to_json(), indent=2, ensure_ascii=False))
    return EXIT_OK


def _cmd_annotate(args) -> int:
    kb, index, config = _load(args)
    text = Path(args.text).read_text(encoding="utf-8")
    result = disambiguate_text(kb, index, text, "graph", graph_config=config.graph)
    sys.stdout.write(annotate_text(text, result, args.url_prefix))
    if not text.endswith("\n"):
        sys.stdout.write("\n")
    return EXIT_OK


def _cmd_bench(args) -> int:
    if args.workers < 1:
        raise _UsageError("--workers must be >= 1")
    kb, index, config = _load(args)
    queries = load_queries(args.queries)
    gold = load_gold(args.gold)
    started = time.perf_counter()
    report = run_benchmark(
        kb, index, queries, gold, args.strategy, args.timeout,
        workers=args.workers,
        clock=frozen_clock if args.fixed_clock else time.perf_counter,
        seed=args.seed,
        graph_config=config.graph, topic_config=config.topic, hp=config.hyperparameters,
    )
    if args.output:
        emit_report(report, args.output)
    else:
        csv.writer(sys.stdout, lineterminator="\n").writerows(report_rows(report))
    timed_out = sum(o.timed_out for o in report.per_query)
    print(
        f"{args.strategy}: accuracy {report.accuracy:.4f} over {len(report.per_query)} queries, "
        f"{timed_out} timed out, {time.perf_counter() - started:.2f}s",
        file=sys.stderr,
    )
    if args.min_accuracy is not None and report.accuracy < args.min_accuracy:
        print(f"accuracy below floor {args.min_accuracy}", file=sys.stderr)
        return EXIT_BELOW_FLOOR
    return EXIT_OK


def _cmd_serve(args) -> int:  # pragma: no cover - blocks on the network
    from .service import serve

    config = load_config(args.config)
    if config.service is None:
        raise ConfigError(f"{args.config}: missing 'service' section")
    serve(config)
    return EXIT_OK


_COMMANDS = {
    "ingest": _cmd_ingest,
    "index": _cmd_index,
    "query": _cmd_query,
    "annotate": _cmd_annotate,
    "bench": _cmd_bench,
    "serve": _cmd_serve,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"entlink: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EntLinkError, OSError, UnicodeDecodeError) as exc:
        print(f"entlink: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
