"""Corpus quality scores and the per-threshold report."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Iterable, Mapping

from .alignment import SentencePair
from .metrics import (
    damerau_levenshtein_distance,
    gestalt_similarity,
    hamming_distance,
    normalized_similarity,
)


class MetricKind(str, enum.Enum):
    GESTALT = "gestalt"
    HAMMING = "hamming"
    DAMERAU_LEVENSHTEIN = "damerau_levenshtein"

    @classmethod
    def parse(cls, name: str) -> "MetricKind":
        name = name.strip().lower()
        if name == "dl":
            return cls.DAMERAU_LEVENSHTEIN
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown metric {name!r}; expected gestalt, hamming or dl") from None

    @property
    def title(self) -> str:
        return _TITLES[self]


_TITLES = {
    MetricKind.GESTALT: "Gestalt",
    MetricKind.HAMMING: "Hamming",
    MetricKind.DAMERAU_LEVENSHTEIN: "Damerau-Levenshtein",
}

ALL_METRICS = tuple(MetricKind)


class UndefinedAccuracy(ValueError):
    pass


def pair_accuracy(pair: SentencePair, metric: MetricKind) -> int:
    """Similarity of the baseline sentence to the crawled English sentence."""
    a, b = pair.baseline_sentence, pair.english_sentence
    if metric is MetricKind.GESTALT:
        return gestalt_similarity(a, b)
    if metric is MetricKind.HAMMING:
        return normalized_similarity(hamming_distance(a, b), a, b)
    if metric is MetricKind.DAMERAU_LEVENSHTEIN:
        return normalized_similarity(damerau_levenshtein_distance(a, b), a, b)
    raise ValueError(f"unknown metric {metric!r}")


def round2(value: Fraction) -> float:
    q = Decimal(value.numerator) / Decimal(value.denominator)
    return float(q.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def corpus_accuracy(pairs: Iterable[SentencePair], metric: MetricKind) -> float:
    """Mean pair accuracy, computed exactly and rounded to two decimals."""
    scores = [pair_accuracy(p, metric) for p in pairs]
    if not scores:
        raise UndefinedAccuracy("accuracy is undefined for an empty corpus")
    return round2(Fraction(sum(scores), len(scores)))


@dataclass
class ThresholdRow:
    pair_count: int
    accuracy: dict[MetricKind, float | None] = field(default_factory=dict)

    def __post_init__(self):
        if self.pair_count < 0:
            raise ValueError("pair_count must be non-negative")
        if self.pair_count == 0 and any(v is not None for v in self.accuracy.values()):
            raise ValueError("accuracy is undefined when there are no pairs")


@dataclass
class CorpusReport:
    per_threshold: dict[int, ThresholdRow] = field(default_factory=dict)

    @classmethod
    def from_corpora(
        cls,
        corpora: Mapping[int, list[SentencePair]],
        metrics: Iterable[MetricKind] = ALL_METRICS,
    ) -> "CorpusReport":
        metrics = list(metrics)
        rows = {}
        for threshold in sorted(corpora):
            pairs = corpora[threshold]
            acc = {m: (corpus_accuracy(pairs, m) if pairs else None) for m in metrics}
            rows[threshold] = ThresholdRow(len(pairs), acc)
        return cls(rows)

    def to_json(self) -> dict:
        rows = []
        for threshold in sorted(self.per_threshold):
            row = self.per_threshold[threshold]
            rows.append(
                {
                    "threshold": threshold,
                    "pairs": row.pair_count,
                    "accuracy": {m.value: row.accuracy.get(m) for m in ALL_METRICS},
                }
            )
        return {"thresholds": rows}

    @classmethod
    def from_json(cls, obj: dict) -> "CorpusReport":
        rows = {}
        for item in obj["thresholds"]:
            acc = {MetricKind(k): v for k, v in item["accuracy"].items()}
            rows[int(item["threshold"])] = ThresholdRow(int(item["pairs"]), acc)
        return cls(rows)


def render_json(report: CorpusReport) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=False) + "\n"


def render_report(report: CorpusReport) -> str:
    """Plain-text table: one row per threshold, columns padded to align."""
    header = ["Threshold", "Pairs"] + [m.title for m in ALL_METRICS]
    rows = [header]
    for threshold in sorted(report.per_threshold):
        row = report.per_threshold[threshold]
        cells = [f"{threshold} %", f"{row.pair_count:,}"]
        for m in ALL_METRICS:
            value = row.accuracy.get(m)
            cells.append("" if value is None else f"{value:.2f}")
        rows.append(cells)
    widths = [max(len(r[k]) for r in rows) for k in range(len(header))]
    lines = []
    for r in rows:
        # threshold left-aligned, numbers right-aligned
        parts = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(parts).rstrip())
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
