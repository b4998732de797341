"""Generator for the bundled synthetic corpus ``synthetic_200.jsonl``.

Independent of the simulator: authors are drawn uniformly, some records are
single-authored, and names are emitted with random casing and spacing so
that the file also exercises normalization. The generator keeps its own
record of how many authors enter the co-authorship network each year; that
record is written next to the corpus as ground truth for the tests.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

FIXTURE_SEED = 1999
FIXTURE_YEARS = range(1999, 2009)
PUBS_PER_YEAR = 20
TEAM_SIZES = (1, 2, 3, 4, 5)
TEAM_WEIGHTS = (0.15, 0.35, 0.25, 0.15, 0.10)
P_NEW = 0.5

_SYLLABLES = ["ab", "ba", "ko", "ri", "ma", "tsu", "len", "dor", "vi", "sa", "no", "hel", "gu", "pe", "zan", "ur"]
_INITIALS = "abcdefghjklmnprstw"

DATA_DIR = Path(__file__).parent / "data"
FIXTURE_PATH = DATA_DIR / "synthetic_200.jsonl"
TRUTH_PATH = DATA_DIR / "synthetic_200.truth.json"


def _canonical_name(i: int) -> str:
    n = len(_SYLLABLES)
    surname = _SYLLABLES[i % n] + _SYLLABLES[(i // n) % n] + _SYLLABLES[(i // (n * n)) % n]
    return f"{surname}, {_INITIALS[i % len(_INITIALS)]}."


def _decorate(rng: random.Random, name: str) -> str:
    style = rng.random()
    if style < 0.2:
        name = name.upper()
    elif style < 0.5:
        name = name.title()
    if rng.random() < 0.2:
        name = "  " + name.replace(" ", "   ") + " "
    return name


def generate(seed: int = FIXTURE_SEED) -> tuple[list[dict], dict]:
    """Return ``(records, truth)`` for a 200-publication, 10-year corpus."""
    rng = random.Random(seed)
    pool: list[str] = []
    network: set[str] = set()
    records = []
    truth = {"seed": seed, "publications": 0, "publications_per_year": {}, "new_network_authors": {}}
    for year in FIXTURE_YEARS:
        entrants: set[str] = set()
        for i in range(PUBS_PER_YEAR):
            k = rng.choices(TEAM_SIZES, TEAM_WEIGHTS)[0]
            authors: list[str] = []
            while len(authors) < k:
                if pool and rng.random() >= P_NEW:
                    cand = rng.choice(pool)
                    if cand in authors:
                        continue
                else:
                    cand = _canonical_name(len(pool))
                    pool.append(cand)
                authors.append(cand)
            if k >= 2:
                entrants.update(a for a in authors if a not in network)
            records.append(
                {"id": f"syn-{year}-{i:03d}", "year": year, "authors": [_decorate(rng, a) for a in authors]}
            )
        network |= entrants
        truth["publications_per_year"][str(year)] = PUBS_PER_YEAR
        truth["new_network_authors"][str(year)] = len(entrants)
    truth["publications"] = len(records)
    rng.shuffle(records)
    return records, truth


def write(corpus_path: str | Path, truth_path: str | Path | None = None, seed: int = FIXTURE_SEED) -> dict:
    records, truth = generate(seed)
    with open(corpus_path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps(r, ensure_ascii=False) + "\n")
    if truth_path is not None:
        with open(truth_path, "w", encoding="utf-8") as fh:
            json.dump(truth, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return truth
