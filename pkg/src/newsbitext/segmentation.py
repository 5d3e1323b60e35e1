"""Rule-based sentence boundary disambiguation for English and Hindi.

A delimiter scalar ends a sentence. A lone '.' is exempt when it sits
between two digits (decimal number), follows a known abbreviation, or
follows a short all-letter token. Spans are half-open UTF-8 byte offsets.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import NamedTuple


class Language(str, enum.Enum):
    HINDI = "hi"
    ENGLISH = "en"

    @classmethod
    def parse(cls, value: str) -> "Language":
        aliases = {"hindi": cls.HINDI, "english": cls.ENGLISH}
        try:
            return aliases.get(value.lower()) or cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown language {value!r}; expected 'en' or 'hi'") from None


DANDA = "।"

DELIMITERS = {
    Language.ENGLISH: frozenset("!?."),
    Language.HINDI: frozenset("!?" + DANDA),
}


class SentenceSpan(NamedTuple):
    start: int
    end: int


def load_abbreviations(path: str | Path) -> frozenset[str]:
    """Read one abbreviation per line; blank and '#' lines are skipped."""
    tokens = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if any(ch.isspace() for ch in line):
                raise ValueError(f"abbreviation {line!r} contains whitespace")
            tokens.add(line.rstrip("."))
    return frozenset(tokens)


def _default_english() -> frozenset[str]:
    ref = resources.files("newsbitext").joinpath("data/abbreviations_en.txt")
    with resources.as_file(ref) as path:
        return load_abbreviations(path)


@dataclass(frozen=True)
class SegmenterRules:
    english_abbreviations: frozenset[str] = field(default_factory=_default_english)
    hindi_abbreviations: frozenset[str] = frozenset()
    max_abbrev_token_len: int = 2

    def __post_init__(self):
        if self.max_abbrev_token_len < 1:
            raise ValueError("max_abbrev_token_len must be positive")
        for tok in self.english_abbreviations | self.hindi_abbreviations:
            if not tok or any(ch.isspace() for ch in tok):
                raise ValueError(f"invalid abbreviation {tok!r}")
        # English lookups are case-insensitive
        object.__setattr__(
            self,
            "_english_folded",
            frozenset(t.casefold() for t in self.english_abbreviations),
        )

    def with_english(self, extra) -> "SegmenterRules":
        return SegmenterRules(
            english_abbreviations=self.english_abbreviations | frozenset(extra),
            hindi_abbreviations=self.hindi_abbreviations,
            max_abbrev_token_len=self.max_abbrev_token_len,
        )

    def is_abbreviation(self, token: str, lang: Language) -> bool:
        if lang is Language.ENGLISH:
            return token.casefold() in self._english_folded
        return token in self.hindi_abbreviations


def _is_word(ch: str) -> bool:
    cat = unicodedata.category(ch)
    return cat[0] in "LM" or cat == "Nd"


def _is_letter(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "LM"


def _token_before(text: str, pos: int) -> str:
    start = pos
    while start > 0 and _is_word(text[start - 1]):
        start -= 1
    return text[start:pos]


def _period_exempt(text: str, pos: int, lang: Language, rules: SegmenterRules) -> bool:
    before = text[pos - 1] if pos > 0 else ""
    after = text[pos + 1] if pos + 1 < len(text) else ""
    if before.isdecimal() and after.isdecimal():
        return True
    token = _token_before(text, pos)
    if not token:
        return False
    if rules.is_abbreviation(token, lang):
        return True
    return len(token) <= rules.max_abbrev_token_len and all(map(_is_letter, token))


def _char_spans(text: str, lang: Language, rules: SegmenterRules) -> list[tuple[int, int]]:
    delims = DELIMITERS[lang]
    spans = []
    n = len(text)
    start = None
    i = 0
    while i < n:
        ch = text[i]
        if start is None:
            if ch.isspace():
                i += 1
                continue
            start = i
        if ch in delims:
            run_end = i + 1
            while run_end < n and text[run_end] in delims:
                run_end += 1
            lone_period = run_end == i + 1 and ch == "."
            if lone_period and _period_exempt(text, i, lang, rules):
                i += 1
                continue
            spans.append((start, run_end))
            start = None
            i = run_end
            continue
        i += 1
    if start is not None:
        end = n
        while text[end - 1].isspace():
            end -= 1
        spans.append((start, end))
    return spans


def split_sentences(
    text: str, lang: Language, rules: SegmenterRules | None = None
) -> list[SentenceSpan]:
    """Return the sentence spans of ``text`` as UTF-8 byte offsets."""
    rules = rules if rules is not None else default_rules()
    spans = _char_spans(text, lang, rules)
    if not spans:
        return []
    # char offset -> byte offset, computed incrementally
    result = []
    byte_pos = 0
    char_pos = 0
    for cstart, cend in spans:
        byte_pos += len(text[char_pos:cstart].encode("utf-8"))
        bstart = byte_pos
        byte_pos += len(text[cstart:cend].encode("utf-8"))
        char_pos = cend
        result.append(SentenceSpan(bstart, byte_pos))
    return result


def sentence_texts(text: str, spans: list[SentenceSpan]) -> list[str]:
    data = text.encode("utf-8")
    out = []
    prev_end = 0
    for start, end in spans:
        if not (prev_end <= start < end <= len(data)):
            raise ValueError(f"corrupted span list: ({start}, {end}) for {len(data)} bytes")
        try:
            out.append(data[start:end].decode("utf-8"))
        except UnicodeDecodeError:
            raise ValueError(f"span ({start}, {end}) splits a Unicode scalar") from None
        prev_end = end
    return out


def split_text(text: str, lang: Language, rules: SegmenterRules | None = None) -> list[str]:
    """Convenience wrapper returning sentence strings instead of spans."""
    rules = rules if rules is not None else default_rules()
    return [text[s:e] for s, e in _char_spans(text, lang, rules)]


_DEFAULT: SegmenterRules | None = None


def default_rules() -> SegmenterRules:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = SegmenterRules()
    return _DEFAULT
