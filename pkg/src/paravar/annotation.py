"""Manual categorization workflow: sampling, persistence, aggregation.

Pairs whose variation the automatic cascade cannot explain are sampled
for human annotation with a set of eight variation categories.
Annotations persist in an append-only JSON-lines journal; on load the
latest record per (pair, annotator) wins, which makes re-submission an
overwrite and keeps the journal crash-safe.
"""

from __future__ import annotations

import json
import random
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .classify import DEFAULT_CASCADE, VariationClass, classify
from .corpus import ParaphrasePair
from .errors import InputError, SampleSizeError
from .indels import DEFAULT_FUNCTIONAL, FunctionalRelations
from .synonymy import SynonymLexicon


class ManualCategory(Enum):
    WORD_TO_WORD = "word_to_word"
    WORD_TO_PHRASE = "word_to_phrase"
    PHRASE_TO_PHRASE = "phrase_to_phrase"
    REDUNDANCY_VERBOSITY = "redundancy_verbosity"
    EXPLICIT_PRONOUNS = "explicit_pronouns"
    EMPHASIZER = "emphasizer"
    FIGURATIVE_IDIOM = "figurative_idiom"
    UNCERTAINTY_HEDGING = "uncertainty_hedging"


CATEGORY_ORDER: tuple[ManualCategory, ...] = tuple(ManualCategory)


@dataclass(frozen=True)
class AnnotationRecord:
    """One annotator's category set for one pair."""

    pair_id: str
    categories: frozenset[ManualCategory]
    annotator: str
    timestamp: datetime

    def __post_init__(self):
        if not self.categories:
            raise ValueError("annotation must carry at least one category")

    def to_json(self) -> str:
        return json.dumps(
            {
                "pair_id": self.pair_id,
                "categories": sorted(c.value for c in self.categories),
                "annotator": self.annotator,
                "timestamp": self.timestamp.isoformat(),
            },
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, line: str) -> "AnnotationRecord":
        data = json.loads(line)
        return cls(
            pair_id=data["pair_id"],
            categories=frozenset(ManualCategory(c) for c in data["categories"]),
            annotator=data["annotator"],
            timestamp=datetime.fromisoformat(data["timestamp"]),
        )


def seeded_sample(items: Sequence, n: int, seed: int) -> list:
    """Uniform sample without replacement by partial Fisher-Yates.

    The reference shuffle: at step i, swap position i with position
    ``rng.randrange(i, len(pool))`` of the remaining pool and emit the
    element now at i.  Deterministic in (items order, n, seed).
    """
    pool = list(items)
    rng = random.Random(seed)
    for i in range(n):
        j = rng.randrange(i, len(pool))
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:n]


def sample_unexplained(
    pairs: Sequence[ParaphrasePair],
    lexicon: SynonymLexicon,
    funcs: FunctionalRelations = DEFAULT_FUNCTIONAL,
    n: int = 100,
    seed: int = 0,
    steps: Sequence[str] = DEFAULT_CASCADE,
) -> list[ParaphrasePair]:
    """Seeded uniform sample of pairs the cascade leaves unexplained."""
    if n < 1:
        raise ValueError(f"sample size must be >= 1, got {n}")
    eligible = [
        p for p in pairs if classify(p, lexicon, funcs, steps) is VariationClass.OTHER
    ]
    if len(eligible) < n:
        raise SampleSizeError(requested=n, eligible=len(eligible))
    return seeded_sample(eligible, n, seed)


class AnnotationStore:
    """Durable annotation storage over a JSON-lines journal.

    Writes are serialized through a lock (single-writer contract);
    reads take a snapshot under the same lock.
    """

    def __init__(self, journal_path: str | Path, sample_ids: Iterable[str]):
        self._path = Path(journal_path)
        self._sample_ids = list(sample_ids)
        self._known = set(self._sample_ids)
        self._lock = threading.Lock()
        self._records: dict[tuple[str, str], AnnotationRecord] = {}
        self._load()

    def _load(self) -> None:
        if not self._path.exists():
            return
        with open(self._path, encoding="utf-8") as handle:
            for line_number, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = AnnotationRecord.from_json(line)
                except (json.JSONDecodeError, KeyError, ValueError) as exc:
                    raise InputError(
                        f"{self._path}: bad journal line {line_number}: {exc}"
                    ) from exc
                self._records[(record.pair_id, record.annotator)] = record

    @property
    def sample_ids(self) -> list[str]:
        return list(self._sample_ids)

    def record_annotation(self, record: AnnotationRecord) -> None:
        """Persist a record; same (pair, annotator) overwrites."""
        if record.pair_id not in self._known:
            raise InputError(f"pair {record.pair_id!r} is not in the active sample")
        with self._lock:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            with open(self._path, "a", encoding="utf-8") as handle:
                handle.write(record.to_json() + "\n")
                handle.flush()
            self._records[(record.pair_id, record.annotator)] = record

    def records(self) -> list[AnnotationRecord]:
        with self._lock:
            return list(self._records.values())

    def record_for(self, pair_id: str, annotator: Optional[str] = None) -> Optional[AnnotationRecord]:
        with self._lock:
            if annotator is not None:
                return self._records.get((pair_id, annotator))
            for (pid, _), record in self._records.items():
                if pid == pair_id:
                    return record
        return None

    def annotated_pair_ids(self) -> set[str]:
        with self._lock:
            return {pid for pid, _ in self._records}

    def next_unannotated(self) -> Optional[str]:
        """First sample item, in sample order, with no record yet."""
        done = self.annotated_pair_ids()
        for pair_id in self._sample_ids:
            if pair_id not in done:
                return pair_id
        return None


@dataclass
class CategoryFrequency:
    category: ManualCategory
    count: int
    ratio: float


def category_frequencies(store: AnnotationStore) -> list[CategoryFrequency]:
    """Per-category record counts and their share of all assignments.

    The ratio denominator is the total number of category assignments
    across records, so ratios sum to 1 over a non-empty store.
    """
    records = store.records()
    assignments = sum(len(r.categories) for r in records)
    rows = []
    for category in CATEGORY_ORDER:
        count = sum(1 for r in records if category in r.categories)
        rows.append(
            CategoryFrequency(
                category=category,
                count=count,
                ratio=count / assignments if assignments else 0.0,
            )
        )
    return rows


def sole_category_rate(store: AnnotationStore, category: ManualCategory) -> float:
    """Fraction of records that assign exactly this one category."""
    records = store.records()
    if not records:
        return 0.0
    sole = sum(1 for r in records if r.categories == frozenset({category}))
    return sole / len(records)


def utc_now() -> datetime:
    return datetime.now(timezone.utc)
