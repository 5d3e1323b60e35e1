import json

import pytest

from newsbitext.cli import main

import builders
from oracles import ratio_oracle


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def three_docs(tmp_path):
    # one planted doc plus two with perturbed pages, so thresholds matter
    corpus = builders.planted_corpus(seed=11, days=1, docs_per_day=1)
    graded = builders.graded_corpus(seed=4, pairs_per_band=1)
    day = next(iter(corpus))
    docs = corpus[day] + [d for ds in graded.values() for d in ds][1:3]
    builders.write_fixtures(tmp_path / "fx", {day: docs})
    return tmp_path / "fx", docs


def expected_count(docs, threshold):
    n = 0
    for d in docs:
        for t in d.translated:
            if max(ratio_oracle(t, e) for e in d.english) >= threshold:
                n += 1
    return n


def test_mine_three_documents(capsys, tmp_path, three_docs):
    fx, docs = three_docs
    out = tmp_path / "out"
    code, stdout, _ = run(capsys, "mine", "--start", "2017-12", "--end", "2017-12",
                          "--thresholds", "50,80", "--providers", f"fixture:{fx}", "--out", out)
    assert code == 0
    assert "3 documents aligned" in stdout
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    for t in (50, 80):
        lines = (out / f"corpus_t{t}.jsonl").read_text(encoding="utf-8").splitlines()
        assert len(lines) == expected_count(docs, t) == manifest["pairs"][str(t)]
        assert (out / f"corpus_t{t}.txt").exists()
    assert expected_count(docs, 50) > expected_count(docs, 80)
    for name in ("report.json", "report.txt", "documents.jsonl"):
        assert (out / name).exists()
    assert manifest["documents"] == {"hindi": 3, "translated": 3, "english": 3, "triples": 3}


def test_mine_empty_fixture_dir(capsys, tmp_path):
    (tmp_path / "fx").mkdir()
    code, _, err = run(capsys, "mine", "--start", "2017-12", "--end", "2017-12",
                       "--providers", f"fixture:{tmp_path / 'fx'}", "--out", tmp_path / "out")
    assert code == 1
    assert "no documents processed" in err


def test_mine_missing_translation_is_skipped(capsys, tmp_path, three_docs):
    fx, docs = three_docs
    for f in (fx / "translations").iterdir():
        if f.read_text(encoding="utf-8").split("\n", 1)[0] == " ".join(docs[0].hindi):
            f.unlink()
    out = tmp_path / "out"
    code, _, _ = run(capsys, "mine", "--start", "2017-12", "--end", "2017-12",
                     "--providers", f"fixture:{fx}", "--out", out)
    assert code == 0
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["skipped"]["translation"] == 1
    assert manifest["documents"]["triples"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["--start", "2018-01", "--end", "2017-12"],
        ["--start", "2017-12", "--end", "2017-12", "--thresholds", "50,50"],
        ["--start", "2017-12", "--end", "2017-12", "--thresholds", "120"],
    ],
)
def test_mine_config_errors(capsys, tmp_path, argv):
    (tmp_path / "fx").mkdir()
    code, _, err = run(capsys, "mine", *argv, "--providers", f"fixture:{tmp_path / 'fx'}", "--out", tmp_path / "o")
    assert code == 2
    assert "error" in err


def test_mine_bad_provider_spec(capsys, tmp_path):
    for spec in ("ftp:/x", "fixture:", f"fixture:{tmp_path / 'absent'}"):
        code, _, err = run(capsys, "mine", "--start", "2017-12", "--end", "2017-12",
                           "--providers", spec, "--out", tmp_path / "o")
        assert code == 2, spec


def test_month_parse_error_exits_2(capsys, tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["mine", "--start", "2017-13", "--end", "2017-12", "--providers", "live", "--out", str(tmp_path)])
    assert info.value.code == 2


def write_pairs(path, pairs):
    path.write_text(
        "".join(json.dumps({"date": "2017-12-01", "doc_id": "d", "hi": "ह", "en": e, "baseline": b, "score": 0}) + "\n"
                for b, e in pairs),
        encoding="utf-8",
    )


def test_eval_planted(capsys, tmp_path):
    corpus = tmp_path / "corpus_t70.jsonl"
    write_pairs(corpus, [("Same.", "Same."), ("Other one.", "Other one.")])
    report = tmp_path / "rep" / "report.json"
    code, stdout, _ = run(capsys, "eval", corpus, "--report", report)
    assert code == 0
    row = json.loads(report.read_text(encoding="utf-8"))["thresholds"][0]
    assert row["threshold"] == 70
    assert row["accuracy"] == {"gestalt": 100.0, "hamming": 100.0, "damerau_levenshtein": 100.0}
    assert "100.00" in report.with_suffix(".txt").read_text(encoding="utf-8")
    assert "100.00" in stdout


def test_eval_synthetic_gestalt_mean(capsys, tmp_path):
    corpus = tmp_path / "pairs.jsonl"
    write_pairs(corpus, [("abc", "abc"), ("abcd", "bcde")])
    report = tmp_path / "report.json"
    code, _, _ = run(capsys, "eval", corpus, "--metrics", "gestalt", "--report", report, "--threshold", "50")
    assert code == 0
    acc = json.loads(report.read_text(encoding="utf-8"))["thresholds"][0]["accuracy"]
    assert acc == {"gestalt": 87.5, "hamming": None, "damerau_levenshtein": None}
    assert "87.50" in report.with_suffix(".txt").read_text(encoding="utf-8")


def test_eval_errors(capsys, tmp_path):
    code, _, err = run(capsys, "eval", tmp_path / "missing.jsonl", "--report", tmp_path / "r.json")
    assert code == 2
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"hi": 1}\n', encoding="utf-8")
    code, _, _ = run(capsys, "eval", bad, "--report", tmp_path / "r.json")
    assert code == 2


@pytest.mark.parametrize(
    "metric, a, b, expected",
    [("lev", "kitten", "sitting", "3"), ("ratio", "x", "x", "100"), ("hamming", "karolin", "kathrin", "3"),
     ("dl", "ca", "abc", "3"), ("gestalt", "abcd", "bcde", "75"), ("token_sort", "b a", "a b", "100"),
     ("value_words", "big cat", "cat bag", "1")],
)
def test_dist(capsys, metric, a, b, expected):
    code, out, _ = run(capsys, "dist", metric, a, b)
    assert code == 0 and out == expected + "\n"


def test_dist_unknown_metric(capsys):
    code, _, _ = run(capsys, "dist", "bleu", "a", "b")
    assert code == 2


@pytest.mark.parametrize(
    "lang, text, lines",
    [("en", "He slept. She left.", 2), ("hi", "क्या हुआ? अच्छा!", 2), ("en", "Dr. Smith arrived.", 1)],
)
def test_segment(capsys, tmp_path, lang, text, lines):
    path = tmp_path / "in.txt"
    path.write_text(text, encoding="utf-8")
    code, out, _ = run(capsys, "segment", "--lang", lang, path)
    assert code == 0
    assert len(out.splitlines()) == lines


def test_segment_errors(capsys, tmp_path):
    path = tmp_path / "latin1.txt"
    path.write_bytes("café. ok.".encode("latin-1"))
    assert run(capsys, "segment", "--lang", "en", path)[0] == 2
    assert run(capsys, "segment", "--lang", "fr", path)[0] == 2
    assert run(capsys, "segment", "--lang", "en", tmp_path / "nope.txt")[0] == 2
