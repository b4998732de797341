"""Slow reference implementations used to check the centrality engine.

Nothing here shares code with :mod:`centrum.centrality`. Distances come
from Floyd-Warshall; betweenness lists every geodesic between each pair
explicitly (a depth-first walk that only steps one hop closer to the
target) and counts the ones through each node with exact fractions. Only
usable on small graphs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

INF = float("inf")


def _adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return adj


def degree(n, edges):
    adj = [[0] * n for _ in range(n)]
    for a, b in edges:
        if a != b:
            adj[a][b] = adj[b][a] = 1
    return [sum(row) for row in adj]


def distances(n, edges):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for a, b in edges:
        if a != b:
            d[a][b] = d[b][a] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def closeness(n, edges):
    d = distances(n, edges)
    return [sum(1.0 / d[i][j] for j in range(n) if j != i and d[i][j] < INF) for i in range(n)]


def _geodesics(adj, d, i, j):
    if d[i][j] == INF:
        return []
    out = []
    stack = [(i, (i,))]
    while stack:
        v, path = stack.pop()
        if v == j:
            out.append(path)
            continue
        for w in adj[v]:
            if d[w][j] == d[v][j] - 1:
                stack.append((w, path + (w,)))
    return out


def geodesics(n, edges, i, j):
    """All shortest paths from ``i`` to ``j`` as node tuples."""
    return _geodesics(_adjacency(n, edges), distances(n, edges), i, j)


def pair_dependencies(n, edges):
    """``{(i, j): {k: g_ij(k) / g_ij}}`` over unordered pairs, as exact fractions."""
    adj = _adjacency(n, edges)
    d = distances(n, edges)
    out = {}
    for i, j in combinations(range(n), 2):
        paths = _geodesics(adj, d, i, j)
        shares = {}
        if paths:
            for k in range(n):
                if k in (i, j):
                    continue
                through = sum(1 for p in paths if k in p)
                if through:
                    shares[k] = Fraction(through, len(paths))
        out[(i, j)] = shares
    return out


def betweenness(n, edges):
    total = [Fraction(0)] * n
    for shares in pair_dependencies(n, edges).values():
        for k, f in shares.items():
            total[k] += f
    return [float(x) for x in total]
