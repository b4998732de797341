import io
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from centrum.errors import RangeError, ValidationError
from centrum.ingest import DuplicateAuthorWarning, Publication, TemporalCorpus, normalize_author, parse_publications


@pytest.mark.parametrize(
    "raw, expected",
    [
        ("  Freeman,  L. C. ", "freeman, l. c."),
        ("ABBASI, A.", "abbasi, a."),
        ("abbasi, a.", "abbasi, a."),
        ("Leydesdorff,\tL.\n", "leydesdorff, l."),
    ],
)
def test_normalize_author(raw, expected):
    assert normalize_author(raw) == expected


@given(st.text(min_size=1).filter(lambda s: s.strip()))
def test_normalize_is_idempotent(raw):
    once = normalize_author(raw)
    assert normalize_author(once) == once


@pytest.mark.parametrize("raw", ["", "   ", "\t\n"])
def test_normalize_rejects_blank(raw):
    with pytest.raises(ValidationError, match="r7"):
        normalize_author(raw, record="r7")


def test_csv_year_buckets():
    src = io.StringIO("id,year,authors\np1,1999,A|B\np2,1999,C\np3,2000,A|C\n")
    corpus = parse_publications(src, format="csv")
    assert {y: len(b) for y, b in corpus.by_year.items()} == {1999: 2, 2000: 1}
    assert len(corpus) == 3
    assert corpus.min_year == 1999 and corpus.max_year == 2000


def test_duplicate_author_collapsed_with_warning():
    src = io.StringIO("id,year,authors\np1,2001,A|B|A\n")
    with pytest.warns(DuplicateAuthorWarning):
        corpus = parse_publications(src, format="csv")
    assert corpus.publications(2001)[0].authors == ("a", "b")


def test_duplicate_after_normalization_is_collapsed():
    src = io.StringIO(json.dumps({"id": "x", "year": 2001, "authors": ["Smith, J.", " smith,  j. "]}) + "\n")
    with pytest.warns(DuplicateAuthorWarning):
        corpus = parse_publications(src, format="jsonl")
    assert corpus.publications(2001)[0].authors == ("smith, j.",)


@pytest.mark.parametrize(
    "text, match",
    [
        ("id,year,authors\np1,1999,A|B\np2,1999\n", "line 3"),
        ("id,year,authors\np1,nineteen,A\n", "line 2"),
        ("id,year,authors\np1,999,A\n", r"outside \[1000, 3000\]"),
        ("id,year,authors\np1,3001,A\n", r"outside \[1000, 3000\]"),
        ("id,year,authors\np1,1999,A\np1,2000,B\n", "duplicate publication id"),
        ("id,yr,authors\np1,1999,A\n", "header"),
        ("id,year,authors\np1,1999,A||B\n", "empty author"),
    ],
)
def test_csv_errors(text, match):
    with pytest.raises(ValidationError, match=match):
        parse_publications(io.StringIO(text), format="csv")


@pytest.mark.parametrize(
    "line, match",
    [
        ("{not json", "line 1"),
        ('{"id": "a", "year": 2000}', "missing field"),
        ('{"id": "a", "year": 2000, "authors": []}', "non-empty"),
        ('{"id": "a", "year": 2000, "authors": "A|B"}', "non-empty list"),
        ("[1, 2]", "JSON object"),
    ],
)
def test_jsonl_errors(line, match):
    with pytest.raises(ValidationError, match=match):
        parse_publications(io.StringIO(line + "\n"), format="jsonl")


def test_empty_input_rejected():
    with pytest.raises(ValidationError):
        parse_publications(io.StringIO(""), format="jsonl")


def test_header_line_skipped():
    text = json.dumps({"header": {"generator": "x"}}) + "\n" + json.dumps({"id": "a", "year": 2000, "authors": ["A", "B"]}) + "\n"
    corpus = parse_publications(io.StringIO(text), format="jsonl")
    assert len(corpus) == 1
    assert corpus.header == {"generator": "x"}


def test_fixture_shape(fixture_corpus, fixture_truth):
    assert len(fixture_corpus) == 200
    assert len(fixture_corpus.by_year) == 10
    assert {str(y): len(b) for y, b in fixture_corpus.by_year.items()} == fixture_truth["publications_per_year"]


def test_fixture_regenerates_identically(tmp_path):
    from centrum import fixture

    fixture.write(tmp_path / "f.jsonl", tmp_path / "t.json")
    assert (tmp_path / "f.jsonl").read_text() == fixture.FIXTURE_PATH.read_text()
    assert (tmp_path / "t.json").read_text() == fixture.TRUTH_PATH.read_text()


def test_round_trip(fixture_corpus):
    dumped = fixture_corpus.dumps()
    again = parse_publications(io.StringIO(dumped), format="jsonl")
    assert again == fixture_corpus
    assert again.dumps() == dumped


def test_dump_is_sorted_by_year_then_id(fixture_corpus):
    keys = [(p.year, p.id) for p in fixture_corpus]
    assert keys == sorted(keys)


def test_order_insensitive(fixture_corpus):
    lines = fixture_corpus.dumps().splitlines()
    rng = random.Random(5)
    for _ in range(5):
        rng.shuffle(lines)
        assert parse_publications(io.StringIO("\n".join(lines)), format="jsonl") == fixture_corpus


def test_corpus_iteration_and_counts(fixture_corpus):
    assert list(fixture_corpus.by_year) == sorted(fixture_corpus.by_year)
    assert sum(len(b) for b in fixture_corpus.by_year.values()) == len(list(fixture_corpus))
    assert all(b for b in fixture_corpus.by_year.values())


def test_check_year():
    corpus = TemporalCorpus.from_publications([Publication("a", 2000, ("x", "y"))])
    corpus.check_year(2000)
    with pytest.raises(RangeError, match="2000-2000"):
        corpus.check_year(2001)


def test_publication_rejects_duplicates():
    with pytest.raises(ValidationError):
        Publication("a", 2000, ("x", "x"))


def test_path_format_inferred(tmp_path):
    p = tmp_path / "c.csv"
    p.write_text("id,year,authors\np1,1999,A|B\n")
    assert len(parse_publications(p)) == 1
    with pytest.raises(ValidationError, match="infer"):
        parse_publications(tmp_path / "c.txt")
