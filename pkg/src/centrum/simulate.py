"""Preferential-attachment growth of a co-authorship corpus.

Each simulated year adds ``pubs_per_year`` publications. Every author slot
is filled by a new entrant with probability ``p_new_author``; otherwise an
existing author is drawn (without replacement within the publication) with
probability proportional to ``(c(v) + epsilon) ** alpha``, where ``c`` is
the configured centrality on the previous year-end snapshot. This is a
hypothesis-testing extension: the observed data has no generative model of
its own.
"""

from __future__ import annotations

import json
import math
import sys
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Mapping

import numpy as np

from centrum.centrality import all_centralities
from centrum.errors import ValidationError
from centrum.graph import Snapshot, YearDelta, publication_pairs
from centrum.ingest import Publication, TemporalCorpus

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

GENERATOR_ID = "numpy.random.PCG64"
KERNELS = ("uniform", "degree", "closeness", "betweenness")
DEFAULT_AUTHORS_PER_PUB = {2: 0.4, 3: 0.3, 4: 0.2, 5: 0.1}


@dataclass(frozen=True)
class SimConfig:
    years: int = 10
    pubs_per_year: int = 20
    authors_per_pub: Mapping[int, float] = field(default_factory=lambda: dict(DEFAULT_AUTHORS_PER_PUB))
    p_new_author: float = 0.6
    kernel: str = "degree"
    alpha: float = 1.0
    epsilon: float = 1.0
    seed: int = 0
    start_year: int = 2000

    def __post_init__(self) -> None:
        dist = {int(k): float(v) for k, v in dict(self.authors_per_pub).items()}
        object.__setattr__(self, "authors_per_pub", dict(sorted(dist.items())))
        errs = []
        if self.years < 2:
            errs.append("years must be >= 2")
        if self.pubs_per_year < 1:
            errs.append("pubs_per_year must be >= 1")
        if not dist or min(dist) < 2:
            errs.append("authors_per_pub must be over team sizes >= 2")
        if any(p < 0 or p > 1 for p in dist.values()) or abs(math.fsum(dist.values()) - 1.0) > 1e-9:
            errs.append("authors_per_pub probabilities must lie in [0, 1] and sum to 1")
        if not 0.0 <= self.p_new_author <= 1.0:
            errs.append("p_new_author must lie in [0, 1]")
        if self.kernel not in KERNELS:
            errs.append(f"kernel must be one of {', '.join(KERNELS)}")
        if self.alpha < 0:
            errs.append("alpha must be >= 0")
        if not self.epsilon > 0:
            errs.append("epsilon must be > 0")
        if not 0 <= self.seed < 2**64:
            errs.append("seed must be an unsigned 64-bit integer")
        if not (1000 <= self.start_year and self.start_year + self.years - 1 <= 3000):
            errs.append("simulated years must lie within [1000, 3000]")
        if errs:
            raise ValidationError("invalid simulation config: " + "; ".join(errs))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["authors_per_pub"] = {str(k): v for k, v in self.authors_per_pub.items()}
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "SimConfig":
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValidationError(f"unknown config key(s): {', '.join(sorted(unknown))}")
        return cls(**d)


def load_config(path: str | Path, **overrides) -> SimConfig:
    with open(path, "rb") as fh:
        try:
            raw = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ValidationError(f"{path}: {exc}") from None
    raw.update({k: v for k, v in overrides.items() if v is not None})
    return SimConfig.from_dict(raw)


def kernel_probabilities(s: Snapshot, cfg: SimConfig, threads: int = 1) -> dict[str, float]:
    """Attachment probability of each author in ``s`` under the configured kernel."""
    if not s.nodes:
        raise ValidationError("kernel needs a non-empty snapshot; bootstrap the first year with new authors")
    authors = s.sorted_nodes
    if cfg.kernel == "uniform":
        c = np.zeros(len(authors))
    else:
        vec = all_centralities(s, threads=threads, measures=(cfg.kernel,))[cfg.kernel]
        c = np.array([vec.values[a] for a in authors], dtype=np.float64)
    return dict(zip(authors, kernel_weights(c, cfg.alpha, cfg.epsilon).tolist()))


def kernel_weights(c: np.ndarray, alpha: float, epsilon: float) -> np.ndarray:
    """Normalized ``(c + epsilon) ** alpha``, evaluated in log space."""
    logw = alpha * np.log(np.asarray(c, dtype=np.float64) + epsilon)
    w = np.exp(logw - logw.max())
    return w / w.sum()


@dataclass
class SimTrace:
    corpus: TemporalCorpus
    probabilities: dict[int, dict[str, float]]
    entrants: dict[int, int]
    header: dict

    def dumps(self) -> str:
        head = json.dumps({"header": self.header}, sort_keys=True)
        return head + "\n" + self.corpus.dumps()


def _draw_existing(rng: np.random.Generator, weights: np.ndarray, k: int) -> list[int]:
    w = weights.copy()
    picks = []
    for _ in range(k):
        total = w.sum()
        if total <= 0:
            break
        cum = np.cumsum(w)
        i = int(np.searchsorted(cum, rng.random() * total, side="right"))
        i = min(i, len(w) - 1)
        picks.append(i)
        w[i] = 0.0
    return picks


def run(cfg: SimConfig, threads: int = 1) -> SimTrace:
    """Generate a corpus; deterministic for a fixed config (seed included)."""
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    sizes = np.array(list(cfg.authors_per_pub), dtype=np.int64)
    size_p = np.array(list(cfg.authors_per_pub.values()))
    size_p = size_p / size_p.sum()
    snap = Snapshot.empty(cfg.start_year - 1)
    pubs: list[Publication] = []
    probabilities: dict[int, dict[str, float]] = {}
    entrants: dict[int, int] = {}
    next_id = 0

    def fresh() -> str:
        nonlocal next_id
        next_id += 1
        return f"sim{next_id:06d}"

    for offset in range(cfg.years):
        year = cfg.start_year + offset
        if snap.nodes:
            probs = kernel_probabilities(snap, cfg, threads=threads)
            probabilities[year] = probs
            existing = snap.sorted_nodes
            weights = np.array([probs[a] for a in existing])
        else:
            existing, weights = (), np.zeros(0)
        year_pubs = []
        for i in range(cfg.pubs_per_year):
            k = int(rng.choice(sizes, p=size_p))
            is_new = rng.random(k) < cfg.p_new_author
            n_old = int((~is_new).sum()) if len(existing) else 0
            old = [existing[j] for j in _draw_existing(rng, weights, n_old)]
            authors = old + [fresh() for _ in range(k - len(old))]
            year_pubs.append(Publication(f"p{year}-{i:04d}", year, tuple(authors)))
        inc = Counter(pr for p in year_pubs for pr in publication_pairs(p))
        new_nodes = frozenset(a for p in year_pubs for a in p.authors) - snap.nodes
        entrants[year] = len(new_nodes)
        snap = snap.apply(YearDelta(year, new_nodes, inc))
        pubs.extend(year_pubs)

    header = {"generator": GENERATOR_ID, "config": cfg.to_dict(), "tool": "centrum-simulate"}
    return SimTrace(TemporalCorpus.from_publications(pubs, header=header), probabilities, entrants, header)
