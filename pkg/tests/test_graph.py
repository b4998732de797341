from collections import Counter
from itertools import combinations

import pytest

from centrum.errors import RangeError
from centrum.graph import (
    Snapshot,
    cumulative_snapshot,
    growth_report,
    snapshot_series,
    year_delta,
)
from centrum.simulate import SimConfig, run

from conftest import corpus_from


def rebuild(corpus, year):
    """From-scratch oracle: nodes, weights, weighted sum using plain loops."""
    weights = {}
    for pub in corpus:
        if pub.year > year or len(pub.authors) < 2:
            continue
        for a, b in combinations(sorted(pub.authors), 2):
            weights[(a, b)] = weights.get((a, b), 0) + 1
    nodes = {x for p in weights for x in p}
    return nodes, weights, sum(weights.values())


def test_single_pair():
    s = cumulative_snapshot(corpus_from({1999: [["A", "B"]]}), 1999)
    assert s.nodes == {"a", "b"}
    assert s.weights == {("a", "b"): 1}
    assert s.weighted_link_sum == 1


def test_repeat_collaboration_increments_weight():
    s = cumulative_snapshot(corpus_from({1999: [["A", "B"]], 2000: [["A", "B"]]}), 2000)
    assert s.weights == {("a", "b"): 2}
    assert s.weighted_link_sum == 2
    assert s.edge_count == 1


def test_triangle_publication():
    s = cumulative_snapshot(corpus_from({1999: [["A", "B", "C"]]}), 1999)
    assert s.edge_count == 3
    assert set(s.weights.values()) == {1}
    assert s.weighted_link_sum == 3


def test_same_year_repeat_counts_twice():
    s = cumulative_snapshot(corpus_from({1999: [["A", "B"], ["B", "A", "C"]]}), 1999)
    assert s.weight("a", "b") == 2
    assert s.weighted_link_sum == 4


def test_single_author_papers_add_no_nodes():
    c = corpus_from({1999: [["A"], ["B", "C"]]})
    s = cumulative_snapshot(c, 1999)
    assert s.nodes == {"b", "c"}
    assert "a" in c.authors()


def test_snapshot_range_error():
    c = corpus_from({1999: [["A", "B"]]})
    with pytest.raises(RangeError, match="1999-1999"):
        cumulative_snapshot(c, 2005)


def test_year_delta_first_year():
    c = corpus_from({1999: [["A", "B"], ["C"]], 2000: [["A", "C"]]})
    d = year_delta(c, 1999)
    assert d.new_authors == {"a", "b"}


def test_year_delta_new_authors_and_increments():
    c = corpus_from({1999: [["A", "B"]], 2000: [["A", "C"]]})
    d = year_delta(c, 2000)
    assert d.new_authors == {"c"}
    assert d.new_pair_increments == Counter({("a", "c"): 1})


def test_year_delta_matches_fixture_truth(fixture_corpus, fixture_truth):
    for year in fixture_corpus.years:
        assert len(year_delta(fixture_corpus, year).new_authors) == fixture_truth["new_network_authors"][str(year)]


def test_gap_years_are_empty():
    c = corpus_from({1999: [["A", "B"]], 2002: [["A", "C"]]})
    rows = growth_report(c)
    assert [r.year for r in rows] == [1999, 2000, 2001, 2002]
    assert rows[1].new_links == 0 and rows[1].cum_authors == 2
    assert rows[1].new_links_per_author is None


def test_growth_single_publication():
    (row,) = growth_report(corpus_from({1999: [["A", "B"]]}))
    assert (row.publications, row.new_authors, row.new_links) == (1, 2, 1)
    assert row.new_links_per_author == 0.5


def test_growth_rows_match_rebuild(fixture_corpus):
    rows = growth_report(fixture_corpus)
    cum_pubs = 0
    prev_nodes = set()
    for row in rows:
        nodes, weights, wsum = rebuild(fixture_corpus, row.year)
        pubs = [p for p in fixture_corpus if p.year == row.year]
        cum_pubs += len(pubs)
        increments = sum(len(p.authors) * (len(p.authors) - 1) // 2 for p in pubs)
        assert row.publications == len(pubs)
        assert row.new_authors == len(nodes - prev_nodes)
        assert row.new_links == increments
        assert row.new_links_per_author == increments / len(nodes - prev_nodes)
        assert row.cum_publications == cum_pubs
        assert row.cum_authors == len(nodes)
        assert row.cum_weighted_links == wsum
        assert row.cum_distinct_edges == len(weights)
        assert row.cum_weighted_links_per_author == wsum / len(nodes)
        assert row.cum_distinct_edges_per_author == len(weights) / len(nodes)
        prev_nodes = nodes


def _corpora(fixture_corpus):
    yield fixture_corpus
    for seed in range(3):
        yield run(SimConfig(years=6, pubs_per_year=15, seed=seed)).corpus


def test_incremental_equals_batch_and_rebuild(fixture_corpus):
    for corpus in _corpora(fixture_corpus):
        for prev, delta, cur in snapshot_series(corpus):
            batch = cumulative_snapshot(corpus, delta.year)
            assert cur == batch
            nodes, weights, wsum = rebuild(corpus, delta.year)
            assert cur.nodes == nodes and dict(cur.weights) == weights and cur.weighted_link_sum == wsum


def test_snapshot_invariants(fixture_corpus):
    for corpus in _corpora(fixture_corpus):
        cum_increments = 0
        for prev, delta, cur in snapshot_series(corpus):
            cum_increments += delta.total_increments
            assert cur.weighted_link_sum == cum_increments
            assert prev.nodes <= cur.nodes
            assert all(cur.weights[p] >= w for p, w in prev.weights.items())
            assert not (delta.new_authors & prev.nodes)
            assert all(a in cur.nodes and b in cur.nodes for a, b in delta.new_pair_increments)
            assert all(a != b for a, b in cur.weights)
            assert all(cur.degree(v) >= 1 for v in cur.nodes)
            assert all(w >= 1 for w in cur.weights.values())
            assert cur.weighted_link_sum >= cur.edge_count
            # handshake
            assert sum(cur.degree(v) for v in cur.nodes) == 2 * cur.edge_count


def test_from_edges_and_dot():
    s = Snapshot.from_edges([("b", "a"), ("a", "c", 3), ("a", "b")], year=2000)
    assert s.weights == {("a", "b"): 2, ("a", "c"): 3}
    assert s.to_dot() == 'graph "coauthorship" {\n  "a" -- "b" [weight=2];\n  "a" -- "c" [weight=3];\n}\n'


def test_dot_escapes_quotes():
    s = Snapshot.from_edges([('o"neil, a.', "b")])
    assert '"o\\"neil, a."' in s.to_dot()
