"""Cumulative co-authorship graphs, yearly deltas and the growth table."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from centrum.ingest import Publication, TemporalCorpus

Pair = tuple[str, str]


def make_pair(a: str, b: str) -> Pair:
    """Unordered pair in canonical (sorted) orientation."""
    if a == b:
        raise ValueError(f"self-loop on {a!r}")
    return (a, b) if a < b else (b, a)


def publication_pairs(pub: Publication) -> Iterator[Pair]:
    """The C(k, 2) co-author pairs of one publication."""
    for a, b in combinations(pub.authors, 2):
        yield make_pair(a, b)


@dataclass(frozen=True)
class Snapshot:
    """Cumulative weighted co-authorship graph as of the end of ``year``.

    ``weights`` maps each canonical pair to its number of joint publications.
    ``weighted_link_sum`` is the total of all pair increments, so it counts
    repeat collaborations while ``edge_count`` does not.
    """

    year: int | None
    weights: Mapping[Pair, int]
    weighted_link_sum: int
    nodes: frozenset[str]

    @classmethod
    def empty(cls, year: int | None = None) -> "Snapshot":
        return cls(year=year, weights={}, weighted_link_sum=0, nodes=frozenset())

    @classmethod
    def from_edges(cls, edges: Iterable, year: int | None = None) -> "Snapshot":
        """Build from ``(a, b)`` or ``(a, b, weight)`` tuples; repeated pairs accumulate."""
        weights: Counter = Counter()
        for e in edges:
            a, b = e[0], e[1]
            w = e[2] if len(e) > 2 else 1
            if w < 1:
                raise ValueError(f"edge weight must be >= 1, got {w}")
            weights[make_pair(a, b)] += w
        nodes = frozenset(x for p in weights for x in p)
        return cls(year=year, weights=dict(weights), weighted_link_sum=sum(weights.values()), nodes=nodes)

    def apply(self, delta: "YearDelta") -> "Snapshot":
        """Fold one year's increments onto this snapshot."""
        weights = dict(self.weights)
        for p, n in delta.new_pair_increments.items():
            weights[p] = weights.get(p, 0) + n
        nodes = self.nodes | {x for p in delta.new_pair_increments for x in p}
        return Snapshot(
            year=delta.year,
            weights=weights,
            weighted_link_sum=self.weighted_link_sum + sum(delta.new_pair_increments.values()),
            nodes=frozenset(nodes),
        )

    @property
    def edge_count(self) -> int:
        return len(self.weights)

    @cached_property
    def neighbors(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.nodes}
        for a, b in self.weights:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def sorted_nodes(self) -> tuple[str, ...]:
        return tuple(sorted(self.nodes))

    def degree(self, v: str) -> int:
        return len(self.neighbors.get(v, ()))

    def has_edge(self, a: str, b: str) -> bool:
        return make_pair(a, b) in self.weights

    def weight(self, a: str, b: str) -> int:
        return self.weights.get(make_pair(a, b), 0)

    def __len__(self) -> int:
        return len(self.nodes)

    def to_dot(self, name: str = "coauthorship") -> str:
        """Undirected DOT with a ``weight`` attribute on each edge."""

        def q(s: str) -> str:
            return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

        lines = [f"graph {q(name)} {{"]
        isolated = self.nodes - {x for p in self.weights for x in p}
        for v in sorted(isolated):
            lines.append(f"  {q(v)};")
        for (a, b), w in sorted(self.weights.items()):
            lines.append(f"  {q(a)} -- {q(b)} [weight={w}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class YearDelta:
    year: int
    new_authors: frozenset[str]
    new_pair_increments: Counter

    @property
    def total_increments(self) -> int:
        return sum(self.new_pair_increments.values())


def _year_increments(corpus: TemporalCorpus, year: int) -> Counter:
    inc: Counter = Counter()
    for pub in corpus.publications(year):
        inc.update(publication_pairs(pub))
    return inc


def cumulative_snapshot(corpus: TemporalCorpus, year: int) -> Snapshot:
    """Graph over every multi-author publication dated ``year`` or earlier."""
    corpus.check_year(year)
    return _batch_snapshot(corpus, year)


def _batch_snapshot(corpus: TemporalCorpus, year: int) -> Snapshot:
    weights: Counter = Counter()
    for y, bucket in corpus.by_year.items():
        if y > year:
            break
        for pub in bucket:
            weights.update(publication_pairs(pub))
    nodes = frozenset(x for p in weights for x in p)
    return Snapshot(year=year, weights=dict(weights), weighted_link_sum=sum(weights.values()), nodes=nodes)


def _delta_against(prev: Snapshot, corpus: TemporalCorpus, year: int) -> YearDelta:
    inc = _year_increments(corpus, year)
    touched = {x for p in inc for x in p}
    return YearDelta(year=year, new_authors=frozenset(touched - prev.nodes), new_pair_increments=inc)


def previous_snapshot(corpus: TemporalCorpus, year: int) -> Snapshot:
    """Snapshot at the end of ``year - 1``; empty before the first corpus year."""
    corpus.check_year(year)
    if year == corpus.min_year:
        return Snapshot.empty(year - 1)
    return _batch_snapshot(corpus, year - 1)


def year_delta(corpus: TemporalCorpus, year: int) -> YearDelta:
    return _delta_against(previous_snapshot(corpus, year), corpus, year)


def snapshot_series(corpus: TemporalCorpus) -> Iterator[tuple[Snapshot, YearDelta, Snapshot]]:
    """Yield ``(previous, delta, current)`` for every corpus year, built incrementally."""
    prev = Snapshot.empty(corpus.min_year - 1)
    for year in corpus.years:
        delta = _delta_against(prev, corpus, year)
        cur = prev.apply(delta)
        yield prev, delta, cur
        prev = cur


@dataclass(frozen=True)
class GrowthRow:
    year: int
    publications: int
    new_authors: int
    new_links: int
    cum_publications: int
    cum_authors: int
    cum_corpus_authors: int
    cum_weighted_links: int
    cum_distinct_edges: int

    @property
    def new_links_per_author(self) -> float | None:
        return self.new_links / self.new_authors if self.new_authors else None

    @property
    def cum_weighted_links_per_author(self) -> float | None:
        return self.cum_weighted_links / self.cum_authors if self.cum_authors else None

    @property
    def cum_distinct_edges_per_author(self) -> float | None:
        return self.cum_distinct_edges / self.cum_authors if self.cum_authors else None


GROWTH_COLUMNS = (
    "year",
    "publications",
    "new_authors",
    "new_links",
    "new_links_per_author",
    "cum_publications",
    "cum_authors",
    "cum_corpus_authors",
    "cum_weighted_links",
    "cum_distinct_edges",
    "cum_weighted_links_per_author",
    "cum_distinct_edges_per_author",
)


def growth_report(corpus: TemporalCorpus) -> list[GrowthRow]:
    """One row per year: new-entry counts for the year and cumulative totals.

    Link counts are pair increments (repeat collaborations count again).
    Both cumulative averages are reported because weighted-links/authors and
    distinct-edges/authors are different quantities.
    """
    rows = []
    cum_pubs = 0
    corpus_authors: set[str] = set()
    for _, delta, snap in snapshot_series(corpus):
        pubs = corpus.publications(delta.year)
        cum_pubs += len(pubs)
        for p in pubs:
            corpus_authors.update(p.authors)
        rows.append(
            GrowthRow(
                year=delta.year,
                publications=len(pubs),
                new_authors=len(delta.new_authors),
                new_links=delta.total_increments,
                cum_publications=cum_pubs,
                cum_authors=len(snap.nodes),
                cum_corpus_authors=len(corpus_authors),
                cum_weighted_links=snap.weighted_link_sum,
                cum_distinct_edges=snap.edge_count,
            )
        )
    return rows
