"""CSV serialization of every report. Floats always carry 4 decimals."""

from __future__ import annotations

import csv
import io
from typing import Iterable, Sequence

from centrum.centrality import MEASURES, CentralityVector
from centrum.graph import GROWTH_COLUMNS, GrowthRow
from centrum.stats import CorrelationRow, MeanSplitRow

UNDEFINED = "undefined"


def fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return f"{v:.4f}"
    return str(v)


def to_csv(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def dict_rows_csv(columns: Sequence[str], rows: Iterable[dict]) -> str:
    return to_csv(columns, ([r[c] for c in columns] for r in rows))


def growth_csv(rows: Iterable[GrowthRow]) -> str:
    return to_csv(GROWTH_COLUMNS, ([getattr(r, c) for c in GROWTH_COLUMNS] for r in rows))


def centrality_csv(vectors: Iterable[CentralityVector]) -> str:
    order = {m: i for i, m in enumerate(MEASURES)}
    rows = []
    for vec in sorted(vectors, key=lambda v: order[v.measure]):
        for author, value in vec.ranked():
            rows.append((author, vec.measure, value))
    return to_csv(("author", "measure", "value"), rows)


def correlation_csv(rows: Iterable[CorrelationRow]) -> str:
    out = []
    for r in rows:
        if r.result is None:
            out.append((r.measure, r.year, r.n, UNDEFINED, UNDEFINED, ""))
        else:
            out.append((r.measure, r.year, r.n, r.result.rho, r.result.p_value, r.result.stars))
    return to_csv(("measure", "year", "n", "rho", "p", "stars"), out)


MEAN_SPLIT_COLUMNS = ("measure", "year", "mean", "low_n", "high_n", "low_group_mean", "high_group_mean", "flagged")


def mean_split_csv(rows: Iterable[MeanSplitRow]) -> str:
    return to_csv(
        MEAN_SPLIT_COLUMNS,
        ((r.measure, r.year, r.mean, r.low_n, r.high_n, r.low_group_mean, r.high_group_mean, r.flagged) for r in rows),
    )
