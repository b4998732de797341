"""Publication records in, validated :class:`TemporalCorpus` out.

Two input formats are accepted:

* CSV with header ``id,year,authors`` where ``authors`` is ``|``-separated.
* JSONL, one ``{"id": str, "year": int, "authors": [str, ...]}`` per line.
  A first line of the form ``{"header": {...}}`` (written by the simulator)
  is skipped.

Author identity is exact match on the normalized name; no fuzzy matching.
"""

from __future__ import annotations

import csv
import json
import os
import re
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator, Mapping

from centrum.errors import RangeError, ValidationError

MIN_VALID_YEAR = 1000
MAX_VALID_YEAR = 3000

_WS = re.compile(r"\s+")


class DuplicateAuthorWarning(UserWarning):
    """A record listed the same (normalized) author more than once."""


def normalize_author(raw: str, record: str | None = None) -> str:
    """Return the canonical author id: lowercase, whitespace collapsed, stripped.

    >>> normalize_author("  Freeman,  L. C. ")
    'freeman, l. c.'
    """
    if not isinstance(raw, str):
        raise ValidationError(f"author name must be a string, got {type(raw).__name__}"
                              + (f" in record {record}" if record else ""))
    canon = _WS.sub(" ", raw).strip().lower()
    if not canon:
        where = f"record {record}" if record else "input"
        raise ValidationError(f"empty author name in {where}")
    return canon


@dataclass(frozen=True)
class Publication:
    id: str
    year: int
    authors: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.authors:
            raise ValidationError(f"record {self.id}: no authors")
        if len(set(self.authors)) != len(self.authors):
            raise ValidationError(f"record {self.id}: duplicate authors")

    @property
    def is_collaborative(self) -> bool:
        return len(self.authors) >= 2

    def to_json(self) -> str:
        return json.dumps(
            {"id": self.id, "year": self.year, "authors": list(self.authors)},
            ensure_ascii=False,
        )


@dataclass(frozen=True)
class TemporalCorpus:
    """All publications, bucketed by year.

    Buckets are keyed by year in ascending order and each bucket is sorted by
    publication id, so two corpora built from the same records in any order
    compare equal.
    """

    by_year: Mapping[int, tuple[Publication, ...]]
    header: Mapping | None = field(default=None, compare=False)

    @classmethod
    def from_publications(cls, pubs: Iterable[Publication], header: Mapping | None = None) -> "TemporalCorpus":
        buckets: dict[int, list[Publication]] = {}
        seen: set[str] = set()
        for pub in pubs:
            if pub.id in seen:
                raise ValidationError(f"duplicate publication id {pub.id!r}")
            seen.add(pub.id)
            buckets.setdefault(pub.year, []).append(pub)
        if not buckets:
            raise ValidationError("corpus contains no publications")
        by_year = {y: tuple(sorted(buckets[y], key=lambda p: p.id)) for y in sorted(buckets)}
        return cls(by_year=by_year, header=header)

    @property
    def min_year(self) -> int:
        return next(iter(self.by_year))

    @property
    def max_year(self) -> int:
        return next(reversed(self.by_year.keys()))

    @property
    def years(self) -> range:
        """Every calendar year in ``[min_year, max_year]``, including empty ones."""
        return range(self.min_year, self.max_year + 1)

    def __len__(self) -> int:
        return sum(len(b) for b in self.by_year.values())

    def __iter__(self) -> Iterator[Publication]:
        for bucket in self.by_year.values():
            yield from bucket

    def publications(self, year: int) -> tuple[Publication, ...]:
        return self.by_year.get(year, ())

    def check_year(self, year: int) -> None:
        if not self.min_year <= year <= self.max_year:
            raise RangeError(f"year {year} outside corpus range {self.min_year}-{self.max_year}")

    def authors(self) -> set[str]:
        """Every author in the corpus, including those only on single-author papers."""
        return {a for p in self for a in p.authors}

    def dumps(self) -> str:
        """JSONL dump sorted by (year, id)."""
        return "".join(p.to_json() + "\n" for p in self)

    def dump(self, fh: IO[str]) -> None:
        fh.write(self.dumps())


def _make_publication(pid, year, authors, where: str) -> Publication:
    if not isinstance(pid, str) or not pid.strip():
        raise ValidationError(f"{where}: missing or non-string id")
    pid = pid.strip()
    if isinstance(year, bool) or not isinstance(year, int):
        try:
            year = int(str(year).strip())
        except ValueError:
            raise ValidationError(f"{where}: year {year!r} is not an integer") from None
    if not MIN_VALID_YEAR <= year <= MAX_VALID_YEAR:
        raise ValidationError(f"{where}: year {year} outside [{MIN_VALID_YEAR}, {MAX_VALID_YEAR}]")
    if not isinstance(authors, list) or not authors:
        raise ValidationError(f"{where}: authors must be a non-empty list")
    canon: list[str] = []
    for raw in authors:
        a = normalize_author(raw, record=f"{pid} ({where})")
        if a in canon:
            warnings.warn(f"record {pid}: duplicate author {a!r} collapsed", DuplicateAuthorWarning, stacklevel=3)
            continue
        canon.append(a)
    return Publication(pid, year, tuple(canon))


def _iter_csv(fh: IO[str]) -> Iterator[Publication]:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        return
    if [h.strip().lower() for h in header] != ["id", "year", "authors"]:
        raise ValidationError(f"line 1: expected header 'id,year,authors', got {','.join(header)!r}")
    for row in reader:
        where = f"line {reader.line_num}"
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 3:
            raise ValidationError(f"{where}: expected 3 fields, got {len(row)}")
        pid, year, authors = row
        yield _make_publication(pid, year, authors.split("|"), where)


def _iter_jsonl(fh: IO[str]) -> Iterator[Publication | dict]:
    for lineno, line in enumerate(fh, start=1):
        if not line.strip():
            continue
        where = f"line {lineno}"
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{where}: invalid JSON ({exc.msg})") from None
        if not isinstance(obj, dict):
            raise ValidationError(f"{where}: expected a JSON object")
        if lineno == 1 and "header" in obj and "id" not in obj:
            yield obj["header"]
            continue
        missing = {"id", "year", "authors"} - obj.keys()
        if missing:
            raise ValidationError(f"{where}: missing field(s) {', '.join(sorted(missing))}")
        yield _make_publication(obj["id"], obj["year"], obj["authors"], where)


def _detect_format(path: str | os.PathLike) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix in (".jsonl", ".json", ".ndjson"):
        return "jsonl"
    raise ValidationError(f"cannot infer format of {path}; pass format='csv' or 'jsonl'")


def parse_publications(source, format: str | None = None) -> TemporalCorpus:
    """Parse a CSV or JSONL record stream into a :class:`TemporalCorpus`.

    ``source`` is a path or an open text stream. For paths, ``format`` is
    inferred from the suffix when omitted.
    """
    if isinstance(source, (str, os.PathLike)):
        fmt = format or _detect_format(source)
        with open(source, encoding="utf-8", newline="") as fh:
            return _parse_stream(fh, fmt)
    if format is None:
        raise ValidationError("format is required when parsing a stream")
    return _parse_stream(source, format)


def _parse_stream(fh: IO[str], fmt: str) -> TemporalCorpus:
    if fmt == "csv":
        return TemporalCorpus.from_publications(_iter_csv(fh))
    if fmt != "jsonl":
        raise ValidationError(f"unknown format {fmt!r}")
    header = None
    pubs = []
    for item in _iter_jsonl(fh):
        if isinstance(item, Publication):
            pubs.append(item)
        else:
            header = item
    return TemporalCorpus.from_publications(pubs, header=header)

