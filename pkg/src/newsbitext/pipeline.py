"""End-to-end mining run: dates -> ingestion -> alignment -> corpora -> report."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .alignment import align_documents, best_matches, check_threshold, render_pairs, write_corpus
from .evaluation import ALL_METRICS, CorpusReport, render_json, render_report
from .ingestion import (
    IngestionError,
    MonthYear,
    NewsDocument,
    ProviderSet,
    enumerate_dates,
    extract_hindi,
    find_english,
    translate_document,
    write_documents,
)
from .segmentation import SegmenterRules, default_rules, load_abbreviations

log = logging.getLogger(__name__)

DEFAULT_THRESHOLDS = (50, 60, 70, 80)


class ConfigError(ValueError):
    pass


@dataclass
class PipelineConfig:
    start: MonthYear
    end: MonthYear
    output_dir: Path
    provider_mode: str = "fixture"
    provider_path: Path | None = None
    thresholds: tuple[int, ...] = DEFAULT_THRESHOLDS
    segmenter_rules_path: Path | None = None
    workers: int = 4

    def validate(self) -> None:
        if self.start > self.end:
            raise ConfigError(f"range error: start {self.start} is after end {self.end}")
        if not self.thresholds:
            raise ConfigError("at least one threshold is required")
        try:
            for t in self.thresholds:
                check_threshold(t)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if len(set(self.thresholds)) != len(self.thresholds):
            raise ConfigError("thresholds must be distinct")
        if self.provider_mode not in ("fixture", "live"):
            raise ConfigError(f"unknown provider mode {self.provider_mode!r}")
        if self.provider_mode == "fixture" and (self.provider_path is None or not self.provider_path.is_dir()):
            raise ConfigError(f"fixture directory {self.provider_path} does not exist")
        if self.segmenter_rules_path is not None and not self.segmenter_rules_path.is_file():
            raise ConfigError(f"abbreviation file {self.segmenter_rules_path} does not exist")

    def rules(self) -> SegmenterRules:
        rules = default_rules()
        if self.segmenter_rules_path is not None:
            rules = rules.with_english(load_abbreviations(self.segmenter_rules_path))
        return rules

    def providers(self) -> ProviderSet:
        if self.provider_mode == "fixture":
            return ProviderSet.from_fixtures(self.provider_path)
        if self.provider_path is None:
            raise ConfigError("live mode needs a directory of Hindi input (live:<dir>)")
        return ProviderSet.live(self.provider_path)


@dataclass
class _Ingested:
    hindi: NewsDocument
    translated: NewsDocument | None = None
    english: NewsDocument | None = None
    failed: str | None = None


def _ingest(doc: NewsDocument, providers: ProviderSet) -> _Ingested:
    out = _Ingested(doc)
    try:
        out.translated = translate_document(doc, providers)
    except IngestionError as exc:
        log.warning("%s: translation failed: %s", doc.id, exc)
        out.failed = "translation"
        return out
    try:
        out.english = find_english(out.translated, providers)
    except IngestionError as exc:
        log.warning("%s: search failed: %s", doc.id, exc)
        out.failed = "search"
        return out
    if out.english is None:
        log.warning("%s: no usable English candidate", doc.id)
        out.failed = "no_candidate"
    return out


@dataclass
class RunResult:
    exit_code: int
    manifest: dict = field(default_factory=dict)


def run_mine(config: PipelineConfig) -> RunResult:
    config.validate()
    providers = config.providers()
    rules = config.rules()
    dates = enumerate_dates(config.start, config.end)

    hindi = [doc for day in dates for doc in extract_hindi(day, providers)]
    # map() keeps input order, so output never depends on completion order
    with ThreadPoolExecutor(max_workers=max(1, config.workers)) as pool:
        ingested = list(pool.map(lambda d: _ingest(d, providers), hindi))

    translated = [r.translated for r in ingested if r.translated is not None]
    english = [r.english for r in ingested if r.english is not None]
    triples = align_documents(hindi, translated, english)
    scored = [best_matches(tri, rules) for tri in triples]
    corpora = {t: [p for tm in scored for p in tm.pairs(t)] for t in sorted(config.thresholds)}

    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_documents(out / "documents.jsonl", [d for r in ingested for d in (r.hindi, r.translated, r.english) if d])
    counts = {}
    for t, pairs in corpora.items():
        counts[str(t)] = write_corpus(out / f"corpus_t{t}.jsonl", pairs)
        (out / f"corpus_t{t}.txt").write_text(render_pairs(pairs), encoding="utf-8", newline="\n")

    report = CorpusReport.from_corpora(corpora, ALL_METRICS)
    (out / "report.json").write_text(render_json(report), encoding="utf-8", newline="\n")
    (out / "report.txt").write_text(render_report(report), encoding="utf-8", newline="\n")

    failures = [r.failed for r in ingested if r.failed]
    manifest = {
        "start": str(config.start),
        "end": str(config.end),
        "dates": len(dates),
        "thresholds": sorted(config.thresholds),
        "documents": {
            "hindi": len(hindi),
            "translated": len(translated),
            "english": len(english),
            "triples": len(triples),
        },
        "skipped": {
            "translation": failures.count("translation"),
            "search": failures.count("search"),
            "no_candidate": failures.count("no_candidate"),
        },
        "sentences": {
            "hindi": sum(tm.hindi_sentences for tm in scored),
            "translated": sum(tm.translated_sentences for tm in scored),
            "english": sum(tm.english_sentences for tm in scored),
            "unpaired": sum(tm.mismatch for tm in scored),
            "documents_with_count_mismatch": sum(1 for tm in scored if tm.mismatch),
        },
        "pairs": counts,
    }
    (out / "manifest.json").write_text(
        json.dumps(manifest, indent=2, ensure_ascii=False) + "\n", encoding="utf-8", newline="\n"
    )
    if not triples:
        log.error("no documents processed")
        return RunResult(1, manifest)
    return RunResult(0, manifest)
