"""Citation-profile data model, validation, and ingestion.

A profile is a non-increasing sequence of non-negative integer citation
counts.  Loaders accept unsorted input and sort it; zero entries are kept
(they contribute to ``p`` but to no index).  ``TruncatedProfile`` carries a
rank prefix for blind estimation, where the tail of the profile is unknown.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import date
from typing import IO, Iterable, Union

from .errors import NegativeCitation, ParseError, RankOutOfRange

SOURCES = ("scopus", "google_scholar", "other")


@dataclass(frozen=True)
class CitationProfile:
    """An immutable, validated citation profile.

    ``citations`` is non-increasing with every entry >= 0.  Derived counts:
    ``p`` (publications), ``n_p_plus`` (publications with at least one
    citation) and ``n_cit`` (total citations).
    """

    citations: tuple[int, ...]
    name: str = ""
    source: str = "other"
    snapshot_date: date | None = None

    @property
    def p(self) -> int:
        return len(self.citations)

    @property
    def n_p_plus(self) -> int:
        return sum(1 for c in self.citations if c >= 1)

    @property
    def n_cit(self) -> int:
        return sum(self.citations)

    # Shared protocol with TruncatedProfile so index/estimator code can
    # consume either.
    @property
    def entries(self) -> tuple[int, ...]:
        return self.citations

    @property
    def is_complete(self) -> bool:
        return True


@dataclass(frozen=True)
class TruncatedProfile:
    """The first ``known_rank_count`` ranks of a profile, highest first."""

    head: tuple[int, ...]
    completeness: str = "prefix-only"  # "full" or "prefix-only"
    name: str = ""
    source: str = "other"

    @property
    def known_rank_count(self) -> int:
        return len(self.head)

    @property
    def entries(self) -> tuple[int, ...]:
        return self.head

    @property
    def is_complete(self) -> bool:
        return self.completeness == "full"


ProfileLike = Union[CitationProfile, TruncatedProfile]


def normalize(
    raw: Iterable[int],
    name: str = "",
    source: str = "other",
    snapshot_date: date | None = None,
) -> CitationProfile:
    """Validate and sort raw citation counts into a profile.

    Entries must be non-negative integers; order does not matter.  Raises
    ``NegativeCitation`` pointing at the first offending input position.
    """
    entries = []
    for i, value in enumerate(raw):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError(i + 1, f"citation count must be an integer, got {value!r}")
        if value < 0:
            raise NegativeCitation(i, value)
        entries.append(value)
    entries.sort(reverse=True)
    if source not in SOURCES:
        source = "other"
    return CitationProfile(
        citations=tuple(entries), name=name, source=source, snapshot_date=snapshot_date
    )


def _parse_date(text: str) -> date | None:
    try:
        return date.fromisoformat(text)
    except ValueError:
        return None


def _load_lines(stream: IO[str]) -> CitationProfile:
    values = []
    for lineno, line in enumerate(stream, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            values.append(int(text))
        except ValueError:
            raise ParseError(lineno, f"expected a decimal integer, got {text!r}") from None
    return normalize(values)


def _load_csv(stream: IO[str]) -> CitationProfile:
    # Comment lines (leading '#') may precede the header; fixture files use
    # them for provenance notes.
    body = "\n".join(line for line in stream if not line.lstrip().startswith("#"))
    reader = csv.DictReader(io.StringIO(body))
    if reader.fieldnames is None or "citations" not in reader.fieldnames:
        raise ParseError(1, "CSV header must contain a 'citations' column")
    values: list[int] = []
    name, source, snapshot = "", "other", None
    for rowno, row in enumerate(reader, start=2):
        cell = (row.get("citations") or "").strip()
        if rowno == 2:  # metadata, when present, sits on the first data row
            name = (row.get("name") or "").strip()
            source = (row.get("source") or "other").strip() or "other"
            snapshot = _parse_date((row.get("date") or "").strip())
        if not cell:
            continue
        try:
            values.append(int(cell))
        except ValueError:
            raise ParseError(rowno, f"expected a decimal integer, got {cell!r}") from None
    return normalize(values, name=name, source=source, snapshot_date=snapshot)


def _load_json(stream: IO[str]) -> CitationProfile:
    try:
        payload = json.load(stream)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    if not isinstance(payload, dict) or "citations" not in payload:
        raise ParseError(1, "JSON object must contain a 'citations' array")
    raw = payload["citations"]
    if not isinstance(raw, list):
        raise ParseError(1, "'citations' must be an array of integers")
    return normalize(
        raw,
        name=str(payload.get("name", "")),
        source=str(payload.get("source", "other")),
        snapshot_date=_parse_date(str(payload.get("date", ""))),
    )


def load_profile(stream: IO[str], format: str) -> CitationProfile:
    """Load a profile from ``stream`` in one of ``json``, ``csv``, ``lines``."""
    loaders = {"lines": _load_lines, "csv": _load_csv, "json": _load_json}
    if format not in loaders:
        raise ValueError(f"unknown format {format!r}; expected one of {sorted(loaders)}")
    return loaders[format](stream)


def truncate_head(profile: CitationProfile, m: int) -> TruncatedProfile:
    """Return the first ``m`` ranks of ``profile`` as a blind-estimation head."""
    if m < 0 or m > profile.p:
        raise RankOutOfRange(f"m={m} outside 0..{profile.p}")
    completeness = "full" if m == profile.p else "prefix-only"
    return TruncatedProfile(
        head=profile.citations[:m],
        completeness=completeness,
        name=profile.name,
        source=profile.source,
    )
