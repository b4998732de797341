import io
import json
import random
from itertools import combinations, permutations

import pytest

from centrum.fixture import FIXTURE_PATH, TRUTH_PATH
from centrum.ingest import parse_publications

ACCEPTANCE_LINES: list[str] = []


def corpus_from(spec: dict):
    """``{year: [[authors...], ...]}`` -> TemporalCorpus with generated ids."""
    lines = []
    for year, pubs in spec.items():
        for i, authors in enumerate(pubs):
            lines.append(json.dumps({"id": f"{year}-{i}", "year": year, "authors": list(authors)}))
    return parse_publications(io.StringIO("\n".join(lines) + "\n"), format="jsonl")


def _canonical(n, edges):
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def nonisomorphic_graphs(max_n):
    """Every simple graph on 1..max_n nodes up to isomorphism, as ``(n, edges)``."""
    out = []
    for n in range(1, max_n + 1):
        slots = list(combinations(range(n), 2))
        seen = set()
        for mask in range(1 << len(slots)):
            edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
            key = _canonical(n, edges)
            if key not in seen:
                seen.add(key)
                out.append((n, list(key)))
    return out


def random_graphs(count, max_n, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.random()
        out.append((n, [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p]))
    return out


@pytest.fixture(scope="session")
def fixture_corpus():
    return parse_publications(FIXTURE_PATH)


@pytest.fixture(scope="session")
def fixture_truth():
    with open(TRUTH_PATH) as fh:
        return json.load(fh)


@pytest.fixture
def toy_corpus():
    # year 1: A-B; year 2: A-C, C-D, A-B again
    return corpus_from({2000: [["A", "B"]], 2001: [["A", "C"], ["C", "D"], ["A", "B"]]})


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
