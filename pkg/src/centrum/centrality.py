"""Degree, harmonic closeness and betweenness on unweighted snapshots.

Collaboration weights are ignored: geodesics are hop counts on the simple
graph. Betweenness is the raw pair sum (no normalization) with fractional
credit when several geodesics tie. Closeness is the sum of reciprocal
distances, with unreachable pairs contributing zero, so it stays finite on
disconnected graphs.

Closeness and betweenness share one traversal. Sources are processed in
fixed-size batches; each batch runs a level-synchronous BFS as sparse
matrix products (path counts forward, dependencies backward), which is
Brandes' accumulation vectorized over the batch columns. Batches are
independent and may run on a thread pool. Partial sums are reduced in batch
order, so results do not depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
import scipy.sparse as sp

from centrum.graph import Snapshot

MEASURES = ("degree", "closeness", "betweenness")
BATCH_SIZE = 64


@dataclass(frozen=True)
class CentralityVector:
    measure: str
    snapshot_year: int | None
    values: Mapping[str, float]

    def __getitem__(self, author: str) -> float:
        return self.values[author]

    def __len__(self) -> int:
        return len(self.values)

    def ranked(self) -> list[tuple[str, float]]:
        """Entries sorted by value descending, then author ascending."""
        return sorted(self.values.items(), key=lambda kv: (-kv[1], kv[0]))


def adjacency_matrix(n: int, edges: Iterable[tuple[int, int]]) -> sp.csr_matrix:
    """Symmetric 0/1 CSR matrix of a simple undirected graph on ``range(n)``."""
    pairs = {(min(a, b), max(a, b)) for a, b in edges if a != b}
    if not pairs:
        return sp.csr_matrix((n, n), dtype=np.float64)
    rows, cols = np.array(sorted(pairs), dtype=np.int64).T
    data = np.ones(2 * len(rows))
    adj = sp.coo_matrix((data, (np.r_[rows, cols], np.r_[cols, rows])), shape=(n, n))
    return adj.tocsr()


def _batch(adj: sp.csr_matrix, sources: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Closeness of each source and betweenness contributions from the batch."""
    n = adj.shape[0]
    b = len(sources)
    cols = np.arange(b)
    dist = np.full((n, b), -1, dtype=np.int64)
    sigma = np.zeros((n, b))
    dist[sources, cols] = 0
    sigma[sources, cols] = 1.0
    frontier = sigma.copy()
    closeness = np.zeros(b)
    depth = 0
    while True:
        reached = adj @ frontier
        reached[dist >= 0] = 0.0
        new = reached > 0
        if not new.any():
            break
        depth += 1
        dist[new] = depth
        sigma += reached
        frontier = reached
        closeness += new.sum(axis=0) / depth

    delta = np.zeros((n, b))
    for d in range(depth, 0, -1):
        at_d = dist == d
        coef = np.where(at_d, (1.0 + delta) / np.where(at_d, sigma, 1.0), 0.0)
        pulled = adj @ coef
        delta += np.where(dist == d - 1, sigma * pulled, 0.0)
    delta[sources, cols] = 0.0
    return closeness, delta.sum(axis=1)


def path_centralities(
    adj: sp.csr_matrix, threads: int = 1, batch_size: int = BATCH_SIZE
) -> tuple[np.ndarray, np.ndarray]:
    """Harmonic closeness and raw betweenness for every node of ``adj``."""
    n = adj.shape[0]
    closeness = np.zeros(n)
    betweenness = np.zeros(n)
    if n == 0:
        return closeness, betweenness
    adj = sp.csr_matrix(adj, dtype=np.float64)
    batches = [np.arange(i, min(i + batch_size, n)) for i in range(0, n, batch_size)]
    if threads > 1 and len(batches) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda s: _batch(adj, s), batches))
    else:
        results = [_batch(adj, s) for s in batches]
    for srcs, (clo, btw) in zip(batches, results):
        closeness[srcs] = clo
        betweenness += btw
    # each unordered pair was visited from both endpoints
    return closeness, betweenness / 2.0


def _indexed(s: Snapshot) -> tuple[Sequence[str], sp.csr_matrix]:
    nodes = s.sorted_nodes
    index = {v: i for i, v in enumerate(nodes)}
    adj = adjacency_matrix(len(nodes), ((index[a], index[b]) for a, b in s.weights))
    return nodes, adj


def degree_centrality(s: Snapshot) -> CentralityVector:
    return CentralityVector("degree", s.year, {v: len(nb) for v, nb in s.neighbors.items()})


def closeness_centrality(s: Snapshot, threads: int = 1) -> CentralityVector:
    return all_centralities(s, threads=threads, measures=("closeness",))["closeness"]


def betweenness_centrality(s: Snapshot, threads: int = 1) -> CentralityVector:
    return all_centralities(s, threads=threads, measures=("betweenness",))["betweenness"]


def all_centralities(
    s: Snapshot, threads: int = 1, measures: Sequence[str] = MEASURES
) -> dict[str, CentralityVector]:
    """Requested measures on one snapshot, sharing a single traversal."""
    unknown = set(measures) - set(MEASURES)
    if unknown:
        raise ValueError(f"unknown measure(s): {', '.join(sorted(unknown))}")
    out: dict[str, CentralityVector] = {}
    if "degree" in measures:
        out["degree"] = degree_centrality(s)
    if "closeness" in measures or "betweenness" in measures:
        nodes, adj = _indexed(s)
        clo, btw = path_centralities(adj, threads=threads)
        if "closeness" in measures:
            out["closeness"] = CentralityVector("closeness", s.year, dict(zip(nodes, clo.tolist())))
        if "betweenness" in measures:
            out["betweenness"] = CentralityVector("betweenness", s.year, dict(zip(nodes, btw.tolist())))
    return {m: out[m] for m in MEASURES if m in out}
