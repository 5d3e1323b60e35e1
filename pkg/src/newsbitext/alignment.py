"""Document triples and threshold-filtered sentence pair mining."""

from __future__ import annotations

import datetime as dt
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple

from .ingestion import NewsDocument, Origin
from .metrics import simple_ratio
from .segmentation import Language, SegmenterRules, default_rules, split_text

log = logging.getLogger(__name__)


class IntegrityError(ValueError):
    pass


class DocumentTriple(NamedTuple):
    hindi: NewsDocument
    translated: NewsDocument
    english: NewsDocument


@dataclass(frozen=True)
class SentencePair:
    hindi_sentence: str
    english_sentence: str
    baseline_sentence: str
    score: int
    date: dt.date
    doc_id: str

    def to_json(self) -> dict:
        return {
            "date": self.date.isoformat(),
            "doc_id": self.doc_id,
            "hi": self.hindi_sentence,
            "en": self.english_sentence,
            "baseline": self.baseline_sentence,
            "score": self.score,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SentencePair":
        return cls(
            hindi_sentence=obj["hi"],
            english_sentence=obj["en"],
            baseline_sentence=obj["baseline"],
            score=int(obj["score"]),
            date=dt.date.fromisoformat(obj["date"]),
            doc_id=obj["doc_id"],
        )


def check_threshold(value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value <= 100:
        raise ValueError(f"threshold must be an integer in [0, 100], got {value!r}")
    return value


def _index(docs: Iterable[NewsDocument], origin: Origin, stream: str) -> dict[str, NewsDocument]:
    out: dict[str, NewsDocument] = {}
    for doc in docs:
        if doc.origin is not origin:
            raise IntegrityError(f"{doc.id} in the {stream} stream has origin {doc.origin.value}")
        if doc.id in out:
            raise IntegrityError(f"duplicate id {doc.id!r} in the {stream} stream")
        out[doc.id] = doc
    return out


def align_documents(
    hindi: Iterable[NewsDocument],
    translated: Iterable[NewsDocument],
    english: Iterable[NewsDocument],
) -> list[DocumentTriple]:
    """Join the three streams on document id, ordered by (date, id).

    Hindi documents missing a translation or a selected English article are
    skipped; all three members must share one date.
    """
    hi = _index(hindi, Origin.CRAWLED_HINDI, "hindi")
    tr = _index(translated, Origin.TRANSLATED_ENGLISH, "translated")
    en = _index(english, Origin.CRAWLED_ENGLISH, "english")
    triples = []
    skipped = 0
    for doc_id, h in hi.items():
        t, e = tr.get(doc_id), en.get(doc_id)
        if t is None or e is None:
            skipped += 1
            continue
        if not h.date == t.date == e.date:
            raise IntegrityError(f"{doc_id}: documents disagree on date")
        triples.append(DocumentTriple(h, t, e))
    if skipped:
        log.info("skipped %d Hindi documents without a complete triple", skipped)
    triples.sort(key=lambda tri: (tri.hindi.date, tri.hindi.id))
    return triples


class Match(NamedTuple):
    """Best English sentence for one Hindi/translated sentence pair."""

    index: int
    hindi: str
    baseline: str
    english: str
    score: int


@dataclass(frozen=True)
class TripleMatches:
    triple: DocumentTriple
    matches: tuple[Match, ...]
    hindi_sentences: int
    translated_sentences: int
    english_sentences: int

    @property
    def mismatch(self) -> int:
        """Sentences left unpaired because the translation changed the count."""
        return abs(self.hindi_sentences - self.translated_sentences)

    def pairs(self, threshold: int) -> list[SentencePair]:
        doc = self.triple.hindi
        return [
            SentencePair(m.hindi, m.english, m.baseline, m.score, doc.date, doc.id)
            for m in self.matches
            if m.score >= threshold
        ]


def best_matches(triple: DocumentTriple, rules: SegmenterRules | None = None) -> TripleMatches:
    """Score every translated sentence against every English sentence once.

    Translated sentence i is paired positionally with Hindi sentence i up to
    the shorter of the two lists. The English sentence with the highest
    simple ratio wins, with ties going to the earliest one.
    """
    rules = rules if rules is not None else default_rules()
    hindi = split_text(triple.hindi.body, Language.HINDI, rules)
    baseline = split_text(triple.translated.body, Language.ENGLISH, rules)
    english = split_text(triple.english.body, Language.ENGLISH, rules)
    matches = []
    if english:
        for i, (h, t) in enumerate(zip(hindi, baseline)):
            best_j, best = 0, -1
            for j, e in enumerate(english):
                score = simple_ratio(t, e)
                if score > best:
                    best_j, best = j, score
                    if score == 100:
                        break
            matches.append(Match(i, h, t, english[best_j], best))
    return TripleMatches(triple, tuple(matches), len(hindi), len(baseline), len(english))


def mine_pairs(
    triple: DocumentTriple, threshold: int, rules: SegmenterRules | None = None
) -> list[SentencePair]:
    return best_matches(triple, rules).pairs(check_threshold(threshold))


def build_corpus(
    triples: Iterable[DocumentTriple],
    thresholds: Iterable[int],
    rules: SegmenterRules | None = None,
) -> dict[int, list[SentencePair]]:
    thresholds = [check_threshold(t) for t in thresholds]
    if len(set(thresholds)) != len(thresholds):
        raise ValueError("thresholds must be distinct")
    ordered = sorted(triples, key=lambda tri: (tri.hindi.date, tri.hindi.id))
    scored = [best_matches(tri, rules) for tri in ordered]
    return {t: [p for tm in scored for p in tm.pairs(t)] for t in thresholds}


def write_corpus(path: str | Path, pairs: Iterable[SentencePair]) -> int:
    n = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for pair in pairs:
            fh.write(json.dumps(pair.to_json(), ensure_ascii=False) + "\n")
            n += 1
    return n


def read_corpus(path: str | Path) -> list[SentencePair]:
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                pairs.append(SentencePair.from_json(json.loads(line)))
            except (ValueError, KeyError, TypeError) as exc:
                raise ValueError(f"{path}:{lineno}: invalid pair record ({exc})") from None
    return pairs


def render_pairs(pairs: Iterable[SentencePair]) -> str:
    """Human-readable dump, one ``hindi ----- english`` pair per paragraph."""
    return "".join(f"{p.hindi_sentence} ----- {p.english_sentence}\n\n" for p in pairs)
