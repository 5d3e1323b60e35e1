"""Acquire and normalize the three document streams.

Hindi articles are read per date, translated to English, and each
translation's headline is searched on the web; the fetched page whose body
has the best token sort ratio against the translation becomes the English
side. Translation, search and page fetching sit behind small provider
interfaces. Fixture providers answer from files keyed by the exact lookup
string; live providers call the web APIs.
"""

from __future__ import annotations

import calendar
import datetime as dt
import enum
import hashlib
import json
import logging
import os
import re
import time
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass
from html.parser import HTMLParser
from pathlib import Path
from typing import Iterable, NamedTuple, Protocol

from .metrics import token_sort_ratio
from .segmentation import Language

log = logging.getLogger(__name__)

MAX_LINKS = 10


class IngestionError(Exception):
    pass


class MissingFixture(IngestionError, LookupError):
    def __init__(self, kind: str, key: str):
        super().__init__(f"no {kind} fixture for key {key!r}")
        self.kind = kind
        self.key = key


class ProviderError(IngestionError):
    """A live provider call failed after retries."""

    def __init__(self, message: str, attempts: int = 1, retry_after: float | None = None):
        super().__init__(message)
        self.attempts = attempts
        self.retry_after = retry_after


class MonthYear(NamedTuple):
    year: int
    month: int

    @classmethod
    def parse(cls, value: str) -> "MonthYear":
        m = re.fullmatch(r"(\d{4})-(\d{1,2})", value.strip())
        if not m or not 1 <= int(m.group(2)) <= 12:
            raise ValueError(f"expected YYYY-MM, got {value!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"


def enumerate_dates(start: MonthYear, end: MonthYear) -> list[dt.date]:
    """Every day from the 1st of ``start`` through the last day of ``end``."""
    start, end = MonthYear(*start), MonthYear(*end)
    if start > end:
        raise ValueError(f"start {start} is after end {end}")
    first = dt.date(start.year, start.month, 1)
    last = dt.date(end.year, end.month, calendar.monthrange(end.year, end.month)[1])
    return [first + dt.timedelta(days=k) for k in range((last - first).days + 1)]


class Origin(str, enum.Enum):
    CRAWLED_HINDI = "crawled_hindi"
    TRANSLATED_ENGLISH = "translated_english"
    CRAWLED_ENGLISH = "crawled_english"


@dataclass(frozen=True)
class NewsDocument:
    id: str
    date: dt.date
    language: Language
    headline: str
    body: str
    origin: Origin
    source_url: str = ""

    def __post_init__(self):
        if self.origin is Origin.TRANSLATED_ENGLISH and self.language is not Language.ENGLISH:
            raise ValueError("translated documents must be English")

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "date": self.date.isoformat(),
            "language": self.language.value,
            "origin": self.origin.value,
            "headline": self.headline,
            "body": self.body,
            "source_url": self.source_url,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "NewsDocument":
        return cls(
            id=obj["id"],
            date=dt.date.fromisoformat(obj["date"]),
            language=Language(obj["language"]),
            headline=obj["headline"],
            body=obj["body"],
            origin=Origin(obj["origin"]),
            source_url=obj.get("source_url", ""),
        )


class CandidateLink(NamedTuple):
    url: str
    rank: int


# -- preprocessing -----------------------------------------------------------

class _TextExtractor(HTMLParser):
    _SKIP = {"script", "style", "noscript", "template"}
    _TITLE = {"title", "h1"}

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.parts: list[str] = []
        self.titles: dict[str, list[str]] = {"title": [], "h1": []}
        self._skip = 0
        self._in_title: str | None = None

    def handle_starttag(self, tag, attrs):
        if tag in self._SKIP:
            self._skip += 1
        elif tag in self._TITLE and self._in_title is None:
            self._in_title = tag
        # block-level tags separate words
        self.parts.append(" ")

    def handle_endtag(self, tag):
        if tag in self._SKIP and self._skip:
            self._skip -= 1
        elif tag == self._in_title:
            self._in_title = None
        self.parts.append(" ")

    def handle_data(self, data):
        if self._skip:
            return
        if self._in_title == "title":
            self.titles["title"].append(data)
            return
        if self._in_title == "h1":
            self.titles["h1"].append(data)
        self.parts.append(data)


def _collapse(text: str) -> str:
    return " ".join(text.split())


def _strip_once(raw: str) -> str:
    parser = _TextExtractor()
    parser.feed(raw)
    parser.close()
    return _collapse("".join(parser.parts))


def preprocess(raw: str) -> str:
    """Strip markup, drop script/style content, decode entities and collapse
    whitespace. Repeats until stable, so the result is a fixpoint."""
    text = raw
    for _ in range(len(raw) + 1):
        cleaned = _strip_once(text)
        if cleaned == text:
            break
        text = cleaned
    return text


def extract_title(raw: str) -> str:
    """The page <title>, else its first <h1>, else ''."""
    parser = _TextExtractor()
    parser.feed(raw)
    parser.close()
    for tag in ("title", "h1"):
        title = preprocess(" ".join(parser.titles[tag]))
        if title:
            return title
    return ""


# -- providers ---------------------------------------------------------------

class Translator(Protocol):
    def translate(self, text: str) -> str: ...


class Searcher(Protocol):
    def search(self, query: str) -> list[str]: ...


class Fetcher(Protocol):
    def fetch(self, url: str) -> str: ...


class HindiSource(Protocol):
    name: str

    def articles(self, day: dt.date) -> list[dict]: ...


def fixture_filename(key: str) -> str:
    return hashlib.sha256(key.encode("utf-8")).hexdigest()[:32] + ".txt"


class FixtureStore:
    """Files under ``translations/``, ``searches/`` and ``pages/``.

    Each entry is named by a hash of its lookup key. The first line holds
    the key verbatim (checked on read); the remaining lines are the value.
    Hindi input lives in ``hindi/YYYY-MM-DD.jsonl``.
    """

    KINDS = ("translations", "searches", "pages")

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def get(self, kind: str, key: str) -> str:
        path = self.root / kind / fixture_filename(key)
        try:
            content = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise MissingFixture(kind, key) from None
        stored, _, value = content.partition("\n")
        if stored != key:
            raise IngestionError(f"fixture hash collision in {path}: {stored!r} != {key!r}")
        return value

    def put(self, kind: str, key: str, value: str) -> Path:
        if kind not in self.KINDS:
            raise ValueError(f"unknown fixture kind {kind!r}")
        if "\n" in key or "\r" in key:
            raise ValueError("fixture keys must be single-line")
        folder = self.root / kind
        folder.mkdir(parents=True, exist_ok=True)
        path = folder / fixture_filename(key)
        path.write_text(f"{key}\n{value}", encoding="utf-8", newline="\n")
        return path

    def put_hindi(self, day: dt.date, articles: Iterable[dict]) -> Path:
        folder = self.root / "hindi"
        folder.mkdir(parents=True, exist_ok=True)
        path = folder / f"{day.isoformat()}.jsonl"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for art in articles:
                fh.write(json.dumps(art, ensure_ascii=False, sort_keys=True) + "\n")
        return path


class FixtureTranslator:
    def __init__(self, store: FixtureStore):
        self.store = store

    def translate(self, text: str) -> str:
        return self.store.get("translations", text)


class FixtureSearcher:
    def __init__(self, store: FixtureStore):
        self.store = store

    def search(self, query: str) -> list[str]:
        return [line.strip() for line in self.store.get("searches", query).splitlines() if line.strip()]


class FixtureFetcher:
    def __init__(self, store: FixtureStore):
        self.store = store

    def fetch(self, url: str) -> str:
        return self.store.get("pages", url)


class DirectoryHindiSource:
    """Raw Hindi articles from ``<root>/hindi/YYYY-MM-DD.jsonl``.

    Each line is an object with ``headline`` and ``body`` and an optional
    ``url``; a missing file means no articles that day.
    """

    def __init__(self, root: str | Path, name: str = "hindi"):
        self.root = Path(root)
        self.name = name

    def articles(self, day: dt.date) -> list[dict]:
        path = self.root / "hindi" / f"{day.isoformat()}.jsonl"
        if not path.exists():
            return []
        with open(path, encoding="utf-8") as fh:
            return [json.loads(line) for line in fh if line.strip()]


def _http(request: urllib.request.Request, attempts: int = 3, backoff: float = 1.0) -> bytes:
    last: Exception | None = None
    retry_after = None
    for attempt in range(1, attempts + 1):
        try:
            with urllib.request.urlopen(request, timeout=30) as resp:
                return resp.read()
        except urllib.error.HTTPError as exc:
            last = exc
            retry_after = float(exc.headers.get("Retry-After") or backoff * attempt)
            if exc.code < 500 and exc.code != 429:
                break
        except (urllib.error.URLError, TimeoutError) as exc:
            last = exc
            retry_after = backoff * attempt
        if attempt < attempts:
            time.sleep(retry_after)
    raise ProviderError(f"{request.full_url}: {last}", attempts=attempt, retry_after=retry_after)


class LiveTranslator:
    URL = "https://translation.googleapis.com/language/translate/v2"

    def __init__(self, api_key: str | None = None):
        self.api_key = api_key or os.environ.get("TRANSLATE_API_KEY")
        if not self.api_key:
            raise ProviderError("TRANSLATE_API_KEY is not set")

    def translate(self, text: str) -> str:
        data = urllib.parse.urlencode(
            {"key": self.api_key, "q": text, "source": "hi", "target": "en", "format": "text"}
        ).encode()
        payload = json.loads(_http(urllib.request.Request(self.URL, data=data)))
        return payload["data"]["translations"][0]["translatedText"]


class LiveSearcher:
    """Custom Search JSON API; ``SEARCH_API_KEY`` is ``<api key>:<engine id>``."""

    URL = "https://www.googleapis.com/customsearch/v1"

    def __init__(self, credentials: str | None = None):
        credentials = credentials or os.environ.get("SEARCH_API_KEY", "")
        key, sep, engine = credentials.partition(":")
        if not (key and sep and engine):
            raise ProviderError("SEARCH_API_KEY must be '<api key>:<search engine id>'")
        self.key, self.engine = key, engine

    def search(self, query: str) -> list[str]:
        params = urllib.parse.urlencode({"key": self.key, "cx": self.engine, "q": query, "num": MAX_LINKS})
        payload = json.loads(_http(urllib.request.Request(f"{self.URL}?{params}")))
        return [item["link"] for item in payload.get("items", [])]


class LiveFetcher:
    def fetch(self, url: str) -> str:
        req = urllib.request.Request(url, headers={"User-Agent": "newsbitext/0.1"})
        return _http(req).decode("utf-8", errors="replace")


@dataclass(frozen=True)
class ProviderSet:
    translator: Translator
    searcher: Searcher
    fetcher: Fetcher
    hindi: HindiSource

    @classmethod
    def from_fixtures(cls, root: str | Path) -> "ProviderSet":
        store = FixtureStore(root)
        return cls(FixtureTranslator(store), FixtureSearcher(store), FixtureFetcher(store), DirectoryHindiSource(root))

    @classmethod
    def live(cls, hindi_root: str | Path) -> "ProviderSet":
        return cls(LiveTranslator(), LiveSearcher(), LiveFetcher(), DirectoryHindiSource(hindi_root))


# -- pipeline steps ----------------------------------------------------------

def extract_hindi(day: dt.date, providers: ProviderSet) -> list[NewsDocument]:
    """Preprocessed Hindi documents for one day; empty ones are dropped."""
    docs = []
    for seq, art in enumerate(providers.hindi.articles(day), 1):
        doc_id = f"{day.isoformat()}-{providers.hindi.name}-{seq:04d}"
        headline = preprocess(art.get("headline", ""))
        body = preprocess(art.get("body", ""))
        if not headline or not body:
            log.warning("dropping %s: empty headline or body after preprocessing", doc_id)
            continue
        docs.append(
            NewsDocument(doc_id, day, Language.HINDI, headline, body, Origin.CRAWLED_HINDI, art.get("url", ""))
        )
    return docs


def translate_document(doc: NewsDocument, providers: ProviderSet) -> NewsDocument:
    if doc.language is not Language.HINDI:
        raise ValueError(f"{doc.id}: only Hindi documents are translated")
    return NewsDocument(
        id=doc.id,
        date=doc.date,
        language=Language.ENGLISH,
        headline=preprocess(providers.translator.translate(doc.headline)),
        body=preprocess(providers.translator.translate(doc.body)),
        origin=Origin.TRANSLATED_ENGLISH,
    )


def search_links(headline: str, providers: ProviderSet) -> list[CandidateLink]:
    if not headline:
        raise ValueError("cannot search for an empty headline")
    urls = providers.searcher.search(headline)[:MAX_LINKS]
    return [CandidateLink(url, rank) for rank, url in enumerate(urls, 1)]


def fetch_article(link: CandidateLink, providers: ProviderSet) -> str:
    if not link.url:
        raise ValueError("empty link url")
    return providers.fetcher.fetch(link.url)


def fetch_candidates(links: list[CandidateLink], providers: ProviderSet) -> list[tuple[CandidateLink, str]]:
    """Fetch every link, skipping (and logging) the ones that fail."""
    fetched = []
    for link in links:
        try:
            fetched.append((link, fetch_article(link, providers)))
        except IngestionError as exc:
            log.warning("skipping link %s: %s", link.url, exc)
    return fetched


def select_best_candidate(
    baseline: NewsDocument, candidates: list[tuple[CandidateLink, str]]
) -> NewsDocument | None:
    """Pick the page whose preprocessed body has the highest token sort ratio
    against the baseline body; ties go to the better search rank."""
    if baseline.origin is not Origin.TRANSLATED_ENGLISH:
        raise ValueError("baseline must be a translated document")
    best = None
    for link, raw in sorted(candidates, key=lambda c: c[0].rank):
        body = preprocess(raw)
        if not body:
            continue
        score = token_sort_ratio(baseline.body, body)
        if best is None or score > best[0]:
            best = (score, link, raw, body)
    if best is None:
        return None
    _, link, raw, body = best
    return NewsDocument(
        id=baseline.id,
        date=baseline.date,
        language=Language.ENGLISH,
        headline=extract_title(raw) or baseline.headline,
        body=body,
        origin=Origin.CRAWLED_ENGLISH,
        source_url=link.url,
    )


def find_english(baseline: NewsDocument, providers: ProviderSet) -> NewsDocument | None:
    links = search_links(baseline.headline, providers)
    return select_best_candidate(baseline, fetch_candidates(links, providers))


def write_documents(path: str | Path, docs: Iterable[NewsDocument]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for doc in docs:
            fh.write(json.dumps(doc.to_json(), ensure_ascii=False) + "\n")


def read_documents(path: str | Path) -> list[NewsDocument]:
    with open(path, encoding="utf-8") as fh:
        return [NewsDocument.from_json(json.loads(line)) for line in fh if line.strip()]
