"""Classification of each year's new links and per-author attachment counts.

A link formed in year ``t`` is judged against the snapshot at the end of
``t - 1``; there is no ordering of publications within a year. Link totals
count pair increments (repeats included). Attachment counts for authors are
counts of distinct partners.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from centrum.errors import RangeError
from centrum.graph import Pair, Snapshot, YearDelta, previous_snapshot, snapshot_series, year_delta
from centrum.ingest import TemporalCorpus


class LinkCategory(str, Enum):
    NEW_NEW = "NEW_NEW"
    NEW_OLD = "NEW_OLD"
    OLD_OLD_UNCONNECTED = "OLD_OLD_UNCONNECTED"
    OLD_OLD_REPEAT = "OLD_OLD_REPEAT"


def categorize(pair: Pair, prev: Snapshot) -> LinkCategory:
    old = (pair[0] in prev.nodes) + (pair[1] in prev.nodes)
    if old == 0:
        return LinkCategory.NEW_NEW
    if old == 1:
        return LinkCategory.NEW_OLD
    if pair in prev.weights:
        return LinkCategory.OLD_OLD_REPEAT
    return LinkCategory.OLD_OLD_UNCONNECTED


@dataclass(frozen=True)
class AttachmentEvent:
    year: int
    pair: Pair
    category: LinkCategory
    increments: int


@dataclass(frozen=True)
class LinkReport:
    year: int
    events: tuple[AttachmentEvent, ...]
    totals: dict[LinkCategory, int]
    cumulative_links: int

    @property
    def new_links(self) -> int:
        return sum(self.totals.values())

    def percent(self, cat: LinkCategory) -> float | None:
        return 100.0 * self.totals[cat] / self.new_links if self.new_links else None


def _classify(prev: Snapshot, delta: YearDelta, cur: Snapshot) -> LinkReport:
    totals = {c: 0 for c in LinkCategory}
    events = []
    for pair in sorted(delta.new_pair_increments):
        n = delta.new_pair_increments[pair]
        cat = categorize(pair, prev)
        totals[cat] += n
        events.append(AttachmentEvent(delta.year, pair, cat, n))
    return LinkReport(delta.year, tuple(events), totals, cur.weighted_link_sum)


def classify_links(corpus: TemporalCorpus, year: int) -> LinkReport:
    prev = previous_snapshot(corpus, year)
    delta = year_delta(corpus, year)
    return _classify(prev, delta, prev.apply(delta))


@dataclass(frozen=True)
class AuthorAttachmentStats:
    """One Table-2 style row.

    ``new_*`` counts are over the year's new network authors; ``old_*``
    counts are over authors already in the previous snapshot.
    """

    year: int
    cumulative_authors: int
    prior_authors: int
    new_authors: int
    new_attached_new: int
    new_attached_old: int
    old_attached_new: int
    old_attached_old: int
    old_attached_any: int

    def percentages(self) -> dict[str, float | None]:
        def pct(k, base):
            return 100.0 * k / base if base else None

        return {
            "new_attached_new": pct(self.new_attached_new, self.new_authors),
            "new_attached_old": pct(self.new_attached_old, self.new_authors),
            "old_attached_new": pct(self.old_attached_new, self.prior_authors),
            "old_attached_old": pct(self.old_attached_old, self.prior_authors),
            "old_attached_any": pct(self.old_attached_any, self.prior_authors),
        }


def _partners(delta: YearDelta) -> dict[str, set[str]]:
    partners: dict[str, set[str]] = {}
    for a, b in delta.new_pair_increments:
        partners.setdefault(a, set()).add(b)
        partners.setdefault(b, set()).add(a)
    return partners


def _author_stats(prev: Snapshot, delta: YearDelta, cur: Snapshot) -> AuthorAttachmentStats:
    new = delta.new_authors
    partners = _partners(delta)
    new_new = new_old = old_new = old_old = old_any = 0
    for v, ps in partners.items():
        has_new = any(p in new for p in ps)
        has_old = any(p in prev.nodes for p in ps)
        if v in new:
            new_new += has_new
            new_old += has_old
        else:
            old_new += has_new
            old_old += has_old
            old_any += 1
    return AuthorAttachmentStats(
        year=delta.year,
        cumulative_authors=len(cur.nodes),
        prior_authors=len(prev.nodes),
        new_authors=len(new),
        new_attached_new=new_new,
        new_attached_old=new_old,
        old_attached_new=old_new,
        old_attached_old=old_old,
        old_attached_any=old_any,
    )


def author_attachment_report(corpus: TemporalCorpus, year: int) -> AuthorAttachmentStats:
    prev = previous_snapshot(corpus, year)
    delta = year_delta(corpus, year)
    return _author_stats(prev, delta, prev.apply(delta))


def link_type_table(corpus: TemporalCorpus) -> list[LinkReport]:
    return [_classify(*step) for step in snapshot_series(corpus)]


def author_table(corpus: TemporalCorpus) -> list[AuthorAttachmentStats]:
    return [_author_stats(*step) for step in snapshot_series(corpus)]


@dataclass(frozen=True)
class AuthorAttachment:
    new_author_count: int
    new_link_count: int
    coauthors_next: int


def _attachments(base: Snapshot, delta: YearDelta, nxt: Snapshot) -> dict[str, AuthorAttachment]:
    partners = _partners(delta)
    out = {}
    for v in base.sorted_nodes:
        ps = partners.get(v, set())
        out[v] = AuthorAttachment(
            new_author_count=sum(1 for p in ps if p in delta.new_authors),
            new_link_count=len(ps),
            coauthors_next=nxt.degree(v),
        )
    return out


def attachments_per_author(corpus: TemporalCorpus, year: int) -> dict[str, AuthorAttachment]:
    """For every author in the ``year`` snapshot, what they gained in ``year + 1``.

    ``new_author_count`` is distinct new entrants co-authoring with them,
    ``new_link_count`` distinct partners (new or old, repeat included) and
    ``coauthors_next`` their total distinct co-authors at the end of
    ``year + 1``.
    """
    corpus.check_year(year)
    if year + 1 > corpus.max_year:
        raise RangeError(f"year {year} has no following year in corpus range {corpus.min_year}-{corpus.max_year}")
    base = previous_snapshot(corpus, year + 1)
    delta = year_delta(corpus, year + 1)
    return _attachments(base, delta, base.apply(delta))


def attachment_series(corpus: TemporalCorpus) -> Iterator[tuple[Snapshot, dict[str, AuthorAttachment]]]:
    """``(snapshot_t, attachments in t + 1)`` for t from min_year to max_year - 1."""
    for prev, delta, cur in snapshot_series(corpus):
        if delta.year == corpus.min_year:
            continue
        yield prev, _attachments(prev, delta, cur)


TABLE2_COLUMNS = (
    "year",
    "cumulative_authors",
    "prior_authors",
    "new_authors",
    "new_attached_new",
    "new_attached_new_pct",
    "new_attached_old",
    "new_attached_old_pct",
    "old_attached_new",
    "old_attached_new_pct",
    "old_attached_old",
    "old_attached_old_pct",
    "old_attached_any",
    "old_attached_any_pct",
)

TABLE3_COLUMNS = (
    "year",
    "cumulative_links",
    "new_links",
    "new_new",
    "new_new_pct",
    "new_old",
    "new_old_pct",
    "old_old_unconnected",
    "old_old_unconnected_pct",
    "old_old_repeat",
    "old_old_repeat_pct",
)


def table2_rows(corpus: TemporalCorpus) -> list[dict]:
    rows = []
    for st in author_table(corpus):
        pct = st.percentages()
        row = {
            "year": st.year,
            "cumulative_authors": st.cumulative_authors,
            "prior_authors": st.prior_authors,
            "new_authors": st.new_authors,
        }
        for key in pct:
            row[key] = getattr(st, key)
            row[key + "_pct"] = pct[key]
        rows.append(row)
    return rows


def table3_rows(corpus: TemporalCorpus) -> list[dict]:
    rows = []
    for rep in link_type_table(corpus):
        row = {"year": rep.year, "cumulative_links": rep.cumulative_links, "new_links": rep.new_links}
        for cat in LinkCategory:
            key = cat.value.lower()
            row[key] = rep.totals[cat]
            row[key + "_pct"] = rep.percent(cat)
        rows.append(row)
    return rows
