import datetime as dt
import json
import random
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from newsbitext.alignment import SentencePair
from newsbitext.evaluation import (
    ALL_METRICS,
    CorpusReport,
    MetricKind,
    ThresholdRow,
    UndefinedAccuracy,
    corpus_accuracy,
    pair_accuracy,
    render_json,
    render_report,
)

from oracles import gestalt_oracle, hamming_positional, osa_memo, round_half_up

DATA = Path(__file__).parent / "data"
G, H, DL = MetricKind.GESTALT, MetricKind.HAMMING, MetricKind.DAMERAU_LEVENSHTEIN

# published pair counts and accuracies
PUBLISHED = {
    50: (12798, 49.79, 71.73, 33.09),
    60: (3443, 50.04, 73.4, 43.14),
    70: (987, 66.6, 77.98, 56.3),
    80: (202, 80.04, 85.19, 69.36),
}


def pair(baseline, english, score=0):
    return SentencePair("हिंदी", english, baseline, score, dt.date(2017, 12, 1), "d")


def accuracy_oracle(p, metric):
    a, b = p.baseline_sentence, p.english_sentence
    longest = max(len(a), len(b))
    if metric is G:
        return gestalt_oracle(a, b)
    if longest == 0:
        return 100
    dist = hamming_positional(a, b) if metric is H else osa_memo(a, b)
    return round_half_up(100 * (longest - dist), longest)


@pytest.mark.parametrize("metric", ALL_METRICS)
def test_exact_match_is_100(metric):
    assert pair_accuracy(pair("Same words.", "Same words."), metric) == 100
    assert pair_accuracy(pair("", ""), metric) == 100


def test_pair_accuracy_examples():
    assert pair_accuracy(pair("abcd", "bcde"), G) == 75
    assert osa_memo("ab", "ba") == 1
    assert pair_accuracy(pair("ab", "ba"), DL) == 50
    assert pair_accuracy(pair("karolin", "kathrin"), H) == round_half_up(400, 7)  # 57.14


def test_corpus_accuracy_examples():
    pairs = [pair("abc", "abc"), pair("ab", "ba")]
    assert [pair_accuracy(p, DL) for p in pairs] == [100, 50]
    assert corpus_accuracy(pairs, DL) == 75.00
    assert corpus_accuracy([pair("x", "x")], H) == 100.00
    with pytest.raises(UndefinedAccuracy):
        corpus_accuracy([], G)


def test_corpus_accuracy_rounds_to_two_decimals():
    # scores 100, 100, 57 -> 85.666... -> 85.67
    pairs = [pair("a", "a"), pair("b", "b"), pair("kitten", "sitting")]
    assert [pair_accuracy(p, H) for p in pairs] == [100, 100, 57]
    assert corpus_accuracy(pairs, H) == 85.67


@given(st.lists(st.tuples(st.text("abcd ", max_size=10), st.text("abcd ", max_size=10)), min_size=1, max_size=8))
def test_corpus_accuracy_matches_brute_force_mean(raw):
    pairs = [pair(a, b) for a, b in raw]
    for metric in ALL_METRICS:
        scores = [accuracy_oracle(p, metric) for p in pairs]
        assert all(0 <= s <= 100 for s in scores)
        expected = round_half_up(100 * sum(scores), len(scores)) / 100
        assert corpus_accuracy(pairs, metric) == expected


def test_accuracy_is_order_invariant():
    rng = random.Random(5)
    pairs = [pair("".join(rng.choices("abc", k=6)), "".join(rng.choices("abc", k=7))) for _ in range(50)]
    shuffled = pairs[:]
    rng.shuffle(shuffled)
    for metric in ALL_METRICS:
        assert corpus_accuracy(pairs, metric) == corpus_accuracy(shuffled, metric)


def test_metric_names():
    assert MetricKind.parse("dl") is DL
    assert MetricKind.parse("Gestalt") is G
    with pytest.raises(ValueError):
        MetricKind.parse("bleu")


def published_report():
    return CorpusReport(
        {t: ThresholdRow(c, {G: g, H: h, DL: d}) for t, (c, g, h, d) in PUBLISHED.items()}
    )


def test_render_published_tables():
    expected = (DATA / "report_table_golden.txt").read_text(encoding="utf-8")
    assert render_report(published_report()) == expected


def test_render_json_schema():
    obj = json.loads(render_json(published_report()))
    assert obj["thresholds"][0] == {
        "threshold": 50,
        "pairs": 12798,
        "accuracy": {"gestalt": 49.79, "hamming": 71.73, "damerau_levenshtein": 33.09},
    }
    assert CorpusReport.from_json(obj).to_json() == obj


def test_render_empty_and_zero_rows():
    empty = render_report(CorpusReport())
    assert empty.splitlines()[0].split() == ["Threshold", "Pairs", "Gestalt", "Hamming", "Damerau-Levenshtein"]
    assert len(empty.splitlines()) == 2
    zero = CorpusReport.from_corpora({50: []})
    assert render_report(zero).splitlines()[-1] == "50 %           0"
    assert json.loads(render_json(zero))["thresholds"][0]["accuracy"] == {
        "gestalt": None, "hamming": None, "damerau_levenshtein": None
    }


def test_zero_count_rejects_accuracy():
    with pytest.raises(ValueError):
        ThresholdRow(0, {G: 50.0})


def test_report_from_corpora():
    corpora = {80: [pair("abc", "abc")], 50: [pair("abc", "abc"), pair("ab", "ba")]}
    report = CorpusReport.from_corpora(corpora, [DL])
    assert list(report.per_threshold) == [50, 80]
    assert report.per_threshold[50].accuracy == {DL: 75.0}
    assert report.per_threshold[80].pair_count == 1
