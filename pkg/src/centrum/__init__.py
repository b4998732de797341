"""Temporal co-authorship network analytics.

Builds cumulative yearly co-authorship graphs from publication records,
computes degree / closeness / betweenness centrality, classifies each
year's new links, rank-correlates centrality with next-year attachment,
and simulates preferential-attachment growth with centrality kernels.
"""

from centrum.errors import CentrumError, RangeError, UndefinedCorrelationError, ValidationError
from centrum.ingest import Publication, TemporalCorpus, normalize_author, parse_publications
from centrum.graph import Snapshot, YearDelta, cumulative_snapshot, growth_report, year_delta
from centrum.centrality import (
    CentralityVector,
    all_centralities,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
)

__version__ = "0.1.0"

__all__ = [
    "CentralityVector",
    "CentrumError",
    "Publication",
    "RangeError",
    "Snapshot",
    "TemporalCorpus",
    "UndefinedCorrelationError",
    "ValidationError",
    "YearDelta",
    "all_centralities",
    "betweenness_centrality",
    "closeness_centrality",
    "cumulative_snapshot",
    "degree_centrality",
    "growth_report",
    "normalize_author",
    "parse_publications",
    "year_delta",
]
