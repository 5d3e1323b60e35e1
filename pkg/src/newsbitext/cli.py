"""Command-line entry point: ``mine``, ``eval``, ``dist`` and ``segment``."""

from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path

from . import metrics
from .alignment import read_corpus
from .evaluation import CorpusReport, MetricKind, render_json, render_report
from .ingestion import MonthYear
from .pipeline import DEFAULT_THRESHOLDS, ConfigError, PipelineConfig, run_mine
from .segmentation import Language, default_rules, load_abbreviations, split_text

log = logging.getLogger("newsbitext")

DIST_METRICS = {
    "hamming": metrics.hamming_distance,
    "lev": metrics.levenshtein_distance,
    "dl": metrics.damerau_levenshtein_distance,
    "gestalt": metrics.gestalt_similarity,
    "ratio": metrics.simple_ratio,
    "token_sort": metrics.token_sort_ratio,
    "value_words": metrics.value_words_distance,
}


class UsageError(Exception):
    pass


def _thresholds(value: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in value.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid threshold list {value!r}") from None


def _month(value: str) -> MonthYear:
    try:
        return MonthYear.parse(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _metric_list(value: str) -> list[MetricKind]:
    try:
        return [MetricKind.parse(v) for v in value.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="newsbitext", description=__doc__)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    mine = sub.add_parser("mine", help="mine a parallel corpus over a month range")
    mine.add_argument("--start", type=_month, required=True, metavar="YYYY-MM")
    mine.add_argument("--end", type=_month, required=True, metavar="YYYY-MM")
    mine.add_argument(
        "--thresholds", type=_thresholds, default=DEFAULT_THRESHOLDS, metavar="50,60,70,80"
    )
    mine.add_argument(
        "--providers", required=True, metavar="fixture:<dir>|live:<dir>",
        help="fixture directory, or live APIs with Hindi input read from <dir>",
    )
    mine.add_argument("--out", type=Path, required=True)
    mine.add_argument("--abbrev", type=Path, help="extra English abbreviations, one per line")

    ev = sub.add_parser("eval", help="score corpus files with the quality metrics")
    ev.add_argument("corpus", type=Path, nargs="+")
    ev.add_argument("--metrics", type=_metric_list, default=list(MetricKind))
    ev.add_argument("--report", type=Path, default=Path("report.json"),
                    help="JSON report path; the text table goes next to it as .txt")
    ev.add_argument("--threshold", type=int,
                    help="row label; defaults to the t<N> in corpus_t<N>.jsonl")

    dist = sub.add_parser("dist", help="print one metric for two strings")
    dist.add_argument("metric")
    dist.add_argument("a")
    dist.add_argument("b")

    seg = sub.add_parser("segment", help="print one sentence per line")
    seg.add_argument("--lang", required=True)
    seg.add_argument("input", type=Path)
    seg.add_argument("--abbrev", type=Path)
    return parser


def _parse_providers(value: str) -> tuple[str, Path | None]:
    mode, _, path = value.partition(":")
    if mode not in ("fixture", "live"):
        raise UsageError(f"--providers must be fixture:<dir> or live:<dir>, got {value!r}")
    if mode == "fixture" and not path:
        raise UsageError("fixture mode needs a directory: fixture:<dir>")
    return mode, Path(path) if path else None


def cmd_mine(args) -> int:
    mode, path = _parse_providers(args.providers)
    config = PipelineConfig(
        start=args.start,
        end=args.end,
        output_dir=args.out,
        provider_mode=mode,
        provider_path=path,
        thresholds=args.thresholds,
        segmenter_rules_path=args.abbrev,
    )
    try:
        result = run_mine(config)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    if result.exit_code == 1:
        print("no documents processed", file=sys.stderr)
    else:
        pairs = ", ".join(f"t{t}={n}" for t, n in result.manifest["pairs"].items())
        print(f"{result.manifest['documents']['triples']} documents aligned; pairs: {pairs}")
    return result.exit_code


def _threshold_for(path: Path, explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    m = re.search(r"corpus_t(\d+)", path.name)
    return int(m.group(1)) if m else 0


def cmd_eval(args) -> int:
    corpora = {}
    for path in args.corpus:
        try:
            pairs = read_corpus(path)
        except (OSError, UnicodeDecodeError, ValueError) as exc:
            raise UsageError(f"cannot read corpus {path}: {exc}") from None
        threshold = _threshold_for(path, args.threshold)
        if threshold in corpora:
            raise UsageError(f"two corpora share threshold {threshold}; pass them separately")
        corpora[threshold] = pairs
    report = CorpusReport.from_corpora(corpora, args.metrics)
    args.report.parent.mkdir(parents=True, exist_ok=True)
    args.report.write_text(render_json(report), encoding="utf-8", newline="\n")
    text = render_report(report)
    args.report.with_suffix(".txt").write_text(text, encoding="utf-8", newline="\n")
    sys.stdout.write(text)
    return 0


def cmd_dist(args) -> int:
    fn = DIST_METRICS.get(args.metric)
    if fn is None:
        raise UsageError(f"unknown metric {args.metric!r}; choose from {', '.join(DIST_METRICS)}")
    print(fn(args.a, args.b))
    return 0


def cmd_segment(args) -> int:
    try:
        lang = Language.parse(args.lang)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        text = args.input.read_bytes().decode("utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    except UnicodeDecodeError as exc:
        raise UsageError(f"{args.input} is not valid UTF-8: {exc}") from None
    rules = default_rules()
    if args.abbrev:
        rules = rules.with_english(load_abbreviations(args.abbrev))
    for sentence in split_text(text, lang, rules):
        print(sentence)
    return 0


COMMANDS = {"mine": cmd_mine, "eval": cmd_eval, "dist": cmd_dist, "segment": cmd_segment}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"newsbitext {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
