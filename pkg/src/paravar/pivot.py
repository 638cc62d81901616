"""Language pivoting over an aligned bilingual corpus.

A paraphrase pair is "reachable by pivoting" when its two sides, after
aggressive normalization, both occur as translations of at least one
common source segment in a line-aligned bilingual corpus (Moses plain
text convention: line i of the source file aligns with line i of the
target file).  Source segments are identified by their normalized text,
so the same English line occurring twice with two different Finnish
translations counts as one shared source.

Normalization lowercases and drops every non-alphanumeric character,
whitespace included, to maximize recall.  The index keys 64-bit hashes
of normalized strings and keeps the original key per bucket, so hash
collisions are verified exactly instead of silently merging entries.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .corpus import ParaphrasePair
from .errors import AlignmentError
from .stats import mean_token_length


def normalize(text: str, collapse_whitespace: bool = False) -> str:
    """Lowercase and drop non-alphanumeric characters (Unicode-aware).

    With ``collapse_whitespace`` runs of whitespace become single
    spaces instead of disappearing, for sensitivity analysis.
    """
    lowered = text.lower()
    if collapse_whitespace:
        kept = "".join(ch if ch.isalnum() else " " for ch in lowered)
        return " ".join(kept.split())
    return "".join(ch for ch in lowered if ch.isalnum())


def _key_hash(key: str) -> int:
    return int.from_bytes(
        hashlib.blake2b(key.encode("utf-8"), digest_size=8).digest(), "little"
    )


class _HashedKeyMap:
    """str -> value map keyed by 64-bit hashes; originals kept per
    bucket so colliding keys stay distinct."""

    def __init__(self):
        self._buckets: dict[int, list[list]] = {}
        self._size = 0

    def get(self, key: str):
        for entry in self._buckets.get(_key_hash(key), ()):
            if entry[0] == key:
                return entry[1]
        return None

    def setdefault(self, key: str, value):
        bucket = self._buckets.setdefault(_key_hash(key), [])
        for entry in bucket:
            if entry[0] == key:
                return entry[1]
        bucket.append([key, value])
        self._size += 1
        return value

    def __len__(self) -> int:
        return self._size


class PivotIndex:
    """Maps normalized target text to the IDs of its source segments.

    A source-segment ID is the 0-based line number of the first aligned
    line carrying that normalized source text, so identical source
    segments share one ID and every ID corresponds to a real line.
    """

    def __init__(self, collapse_whitespace: bool = False):
        self.collapse_whitespace = collapse_whitespace
        self._source_ids = _HashedKeyMap()
        self._targets = _HashedKeyMap()
        self._lines = 0

    def add(self, source_text: str, target_text: str, line_number: int) -> None:
        """Index one aligned line; entries with an empty key on either
        side are dropped."""
        source_key = normalize(source_text, self.collapse_whitespace)
        target_key = normalize(target_text, self.collapse_whitespace)
        self._lines = max(self._lines, line_number + 1)
        if not source_key or not target_key:
            return
        source_id = self._source_ids.setdefault(source_key, line_number)
        self._targets.setdefault(target_key, set()).add(source_id)

    def source_ids(self, text: str) -> set[int]:
        """IDs of source segments whose aligned target normalizes like
        ``text``; empty set when unseen."""
        key = normalize(text, self.collapse_whitespace)
        if not key:
            return set()
        ids = self._targets.get(key)
        return set(ids) if ids else set()

    def __len__(self) -> int:
        return len(self._targets)

    @property
    def aligned_lines(self) -> int:
        return self._lines


def build_index(
    aligned: Iterable[tuple[str, str]], collapse_whitespace: bool = False
) -> PivotIndex:
    """Index aligned (source_text, target_text) pairs."""
    index = PivotIndex(collapse_whitespace)
    for line_number, (source_text, target_text) in enumerate(aligned):
        index.add(source_text, target_text, line_number)
    return index


def read_aligned(source_path: str | Path, target_path: str | Path) -> Iterator[tuple[str, str]]:
    """Stream aligned lines from two parallel files.

    Raises :class:`AlignmentError` when the files disagree on length.
    """
    with open(source_path, encoding="utf-8") as src, open(
        target_path, encoding="utf-8"
    ) as tgt:
        while True:
            source_line = src.readline()
            target_line = tgt.readline()
            if not source_line and not target_line:
                return
            if not source_line or not target_line:
                short = source_path if not source_line else target_path
                raise AlignmentError(
                    f"aligned files differ in line count ({short} is shorter)"
                )
            yield source_line.rstrip("\n"), target_line.rstrip("\n")


def build_index_from_files(
    source_path: str | Path, target_path: str | Path, collapse_whitespace: bool = False
) -> PivotIndex:
    return build_index(read_aligned(source_path, target_path), collapse_whitespace)


@dataclass
class PivotMatchResult:
    """Pivot matching outcome over a corpus (rewrites excluded)."""

    matched_ids: list[str]
    total: int
    mean_length_matched: float
    mean_length_all: float

    @property
    def match_rate(self) -> float:
        return len(self.matched_ids) / self.total if self.total else 0.0


def match_pairs(pairs: Sequence[ParaphrasePair], index: PivotIndex) -> PivotMatchResult:
    """Pairs whose sides share at least one common source segment.

    Rewrites are not naturally occurring translations, so they are
    excluded from the population before matching.
    """
    eligible = [p for p in pairs if p.label.base != "rewrite"]
    matched: list[ParaphrasePair] = []
    for pair in eligible:
        ids1 = index.source_ids(pair.side1.text)
        if not ids1:
            continue
        if ids1 & index.source_ids(pair.side2.text):
            matched.append(pair)

    matched_segments = [s for p in matched for s in (p.side1, p.side2)]
    all_segments = [s for p in eligible for s in (p.side1, p.side2)]
    return PivotMatchResult(
        matched_ids=[p.id for p in matched],
        total=len(eligible),
        mean_length_matched=mean_token_length(matched_segments),
        mean_length_all=mean_token_length(all_segments),
    )
