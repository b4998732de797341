"""Spearman rank correlation and the centrality-vs-attachment reports."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np
from scipy.special import betainc

from centrum.centrality import MEASURES, all_centralities
from centrum.errors import UndefinedCorrelationError, ValidationError
from centrum.evolution import attachment_series
from centrum.ingest import TemporalCorpus

EXACT_MAX_N = 12

TARGETS = ("new_authors", "new_links", "coauthors_next")
_TARGET_FIELD = {
    "new_authors": "new_author_count",
    "new_links": "new_link_count",
    "coauthors_next": "coauthors_next",
}


def stars_for(p: float) -> str:
    if p < 0.01:
        return "**"
    if p < 0.05:
        return "*"
    return ""


@dataclass(frozen=True)
class CorrelationResult:
    rho: float
    n: int
    p_value: float
    stars: str


def average_ranks(values: Sequence[float]) -> list[float]:
    """1-based ranks; tied values share the mean of the ranks they span."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        r = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = r
        i = j + 1
    return ranks


def _pearson(a: Sequence[float], b: Sequence[float]) -> float:
    n = len(a)
    ma = math.fsum(a) / n
    mb = math.fsum(b) / n
    da = [v - ma for v in a]
    db = [v - mb for v in b]
    sab = math.fsum(x * y for x, y in zip(da, db))
    saa = math.fsum(x * x for x in da)
    sbb = math.fsum(y * y for y in db)
    r = sab / math.sqrt(saa * sbb)
    return max(-1.0, min(1.0, r))


def t_test_p(rho: float, n: int) -> float:
    """Two-tailed p for rho under the t approximation with n - 2 df."""
    if abs(rho) >= 1.0:
        return 0.0
    df = n - 2
    t2 = rho * rho * df / (1.0 - rho * rho)
    # P(|T| > t) = I_{df / (df + t^2)}(df / 2, 1 / 2)
    return float(betainc(df / 2.0, 0.5, df / (df + t2)))


def exact_permutation_p(rx: Sequence[float], ry: Sequence[float]) -> float:
    """Two-tailed p over all n! pairings of the (average) ranks.

    The statistic is sum(rx * ry[perm]); its null distribution is built by a
    dynamic program over subsets of ``ry`` indices, which is exact and far
    cheaper than listing permutations.
    """
    n = len(rx)
    if n > EXACT_MAX_N:
        raise ValidationError(f"exact permutation p-value supports n <= {EXACT_MAX_N}, got {n}")
    # average ranks are multiples of 1/2
    x = [int(round(2 * v)) for v in rx]
    y = [int(round(2 * v)) for v in ry]
    obs = sum(a * b for a, b in zip(x, y))
    centre_num = sum(x) * sum(y)
    size = sum(sorted(x)[i] * sorted(y)[i] for i in range(n)) + 1
    layer = {0: np.zeros(size, dtype=np.int64)}
    layer[0][0] = 1
    for i in range(n):
        nxt: dict[int, np.ndarray] = {}
        xi = x[i]
        for mask, counts in layer.items():
            for j in range(n):
                if mask & (1 << j):
                    continue
                shift = xi * y[j]
                m2 = mask | (1 << j)
                tgt = nxt.get(m2)
                if tgt is None:
                    tgt = nxt[m2] = np.zeros(size, dtype=np.int64)
                tgt[shift:] += counts[: size - shift]
        layer = nxt
    dist = layer[(1 << n) - 1]
    s = np.arange(size, dtype=np.int64)
    extreme = np.abs(n * s - centre_num) >= abs(n * obs - centre_num)
    return int(dist[extreme].sum()) / math.factorial(n)


def spearman(x: Sequence[float], y: Sequence[float], exact: bool = False) -> CorrelationResult:
    """Spearman rho with average ranks for ties and a two-tailed p-value.

    ``exact=True`` computes the permutation p-value instead of the t
    approximation; only for n <= 12.
    """
    n = len(x)
    if len(y) != n:
        raise ValidationError(f"length mismatch: {n} vs {len(y)}")
    if n < 3:
        raise ValidationError(f"need at least 3 observations, got {n}")
    if min(x) == max(x) or min(y) == max(y):
        raise UndefinedCorrelationError("undefined correlation: constant input")
    rx = average_ranks(x)
    ry = average_ranks(y)
    rho = _pearson(rx, ry)
    p = exact_permutation_p(rx, ry) if exact else t_test_p(rho, n)
    return CorrelationResult(rho=rho, n=n, p_value=p, stars=stars_for(p))


@dataclass(frozen=True)
class CorrelationRow:
    measure: str
    year: int
    n: int
    result: CorrelationResult | None

    @property
    def defined(self) -> bool:
        return self.result is not None


def _check_measures(measures: Sequence[str]) -> tuple[str, ...]:
    bad = [m for m in measures if m not in MEASURES]
    if bad:
        raise ValidationError(f"unknown measure(s): {', '.join(bad)}")
    return tuple(m for m in MEASURES if m in measures)


def yearly_samples(corpus: TemporalCorpus, measures: Sequence[str] = MEASURES, threads: int = 1) -> Iterator:
    """Per year t: ``(t, authors, {measure: values}, attachments)`` over authors in snapshot t."""
    measures = _check_measures(measures)
    if corpus.max_year <= corpus.min_year:
        raise ValidationError("correlation needs a corpus spanning at least two years")
    for snap, att in attachment_series(corpus):
        authors = snap.sorted_nodes
        cents = all_centralities(snap, threads=threads, measures=measures) if authors else {}
        values = {m: [cents[m].values[a] for a in authors] if authors else [] for m in measures}
        yield snap.year, authors, values, att


def correlation_report(
    corpus: TemporalCorpus,
    measures: Sequence[str] = MEASURES,
    target: str = "new_authors",
    threads: int = 1,
    exact: bool = False,
) -> list[CorrelationRow]:
    """Rho between centrality in year t and ``target`` counted in t + 1.

    Rows are ordered by measure, then year. Every author in snapshot t is
    sampled, including those with nothing in t + 1. Degenerate years (too
    few authors or a constant vector) produce rows with ``result=None``.
    """
    if target not in TARGETS:
        raise ValidationError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    field = _TARGET_FIELD[target]
    rows: dict[str, list[CorrelationRow]] = {m: [] for m in _check_measures(measures)}
    for year, authors, values, att in yearly_samples(corpus, measures, threads):
        ys = [getattr(att[a], field) for a in authors]
        for m in rows:
            try:
                res = spearman(values[m], ys, exact=exact)
            except (UndefinedCorrelationError, ValidationError):
                res = None
            rows[m].append(CorrelationRow(m, year, len(authors), res))
    return [r for m in rows for r in rows[m]]


@dataclass(frozen=True)
class MeanSplitRow:
    measure: str
    year: int
    mean: float
    low_n: int
    high_n: int
    low_group_mean: float | None
    high_group_mean: float | None

    @property
    def flagged(self) -> bool:
        return self.low_n == 0 or self.high_n == 0


def mean_split(values: Sequence[float], outcomes: Sequence[float]) -> tuple[float, list[int], list[int]]:
    """Indices of the low (<= mean) and high (> mean) groups.

    The comparison is exact (rational), so identical values never straddle
    their own float-rounded mean.
    """
    if not values:
        raise ValidationError("mean split needs at least one author")
    exact = [Fraction(v) for v in values]
    total = sum(exact)
    n = len(values)
    low = [i for i, v in enumerate(exact) if v * n <= total]
    high = [i for i, v in enumerate(exact) if v * n > total]
    return float(total / n), low, high


def mean_split_report(corpus: TemporalCorpus, measures: Sequence[str] = MEASURES, threads: int = 1) -> list[MeanSplitRow]:
    """Mean next-year new-author attachments for low vs high centrality authors."""
    rows: dict[str, list[MeanSplitRow]] = {m: [] for m in _check_measures(measures)}
    for year, authors, values, att in yearly_samples(corpus, measures, threads):
        if not authors:
            continue
        ys = [att[a].new_author_count for a in authors]
        for m in rows:
            mean, low, high = mean_split(values[m], ys)
            rows[m].append(
                MeanSplitRow(
                    measure=m,
                    year=year,
                    mean=mean,
                    low_n=len(low),
                    high_n=len(high),
                    low_group_mean=math.fsum(ys[i] for i in low) / len(low) if low else None,
                    high_group_mean=math.fsum(ys[i] for i in high) / len(high) if high else None,
                )
            )
    return [r for m in rows for r in rows[m]]
