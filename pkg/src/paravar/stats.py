"""Corpus-level statistics over paraphrase pairs.

Covers the indel-count distribution, the overrepresentation ranking of
frequently varying lemmas, synonym-accounting rates, the proportion of
non-elementary variation relative to the source material, and token
length statistics.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .corpus import LabelGroup, ParaphrasePair, ParsedSegment, group_label
from .errors import InputError
from .indels import comparison_lemma, indel_count, lemma_indel
from .synonymy import FULL, NONE, SynonymLexicon, account_indels


def _in_group(pair: ParaphrasePair, group_filter: Optional[LabelGroup]) -> bool:
    return group_filter is None or group_label(pair.label) == group_filter


def indel_histogram(
    pairs: Sequence[ParaphrasePair], group_filter: Optional[LabelGroup] = None
) -> dict[int, int]:
    """Frequency of each lemma-indel count over the selected pairs."""
    histogram = Counter(indel_count(p) for p in pairs if _in_group(p, group_filter))
    return dict(sorted(histogram.items()))


@dataclass
class OverrepresentationRecord:
    """How strongly a lemma is concentrated in indels."""

    lemma: str
    indel_occurrences: int
    total_occurrences: int

    def __post_init__(self):
        if not 0 < self.indel_occurrences <= self.total_occurrences:
            raise ValueError(
                f"lemma {self.lemma!r}: indel occurrences "
                f"({self.indel_occurrences}) must be in 1..total "
                f"({self.total_occurrences}); is the frequency list "
                f"consistent with the corpus?"
            )

    @property
    def ratio(self) -> float:
        return self.indel_occurrences / self.total_occurrences


def collect_indel_counts(pairs: Sequence[ParaphrasePair]) -> Counter:
    """Occurrences of each lemma across all lemma indels."""
    counts: Counter = Counter()
    for pair in pairs:
        indel = lemma_indel(pair, content_only=False)
        counts.update(indel.only_in_side1)
        counts.update(indel.only_in_side2)
    return counts


def collect_total_counts(pairs: Sequence[ParaphrasePair]) -> Counter:
    """Occurrences of each lemma across all non-punctuation tokens."""
    counts: Counter = Counter()
    for pair in pairs:
        for segment in (pair.side1, pair.side2):
            counts.update(comparison_lemma(t) for t in segment.content_tokens())
    return counts


def rank_overrepresentation(
    indel_counts: Mapping[str, int],
    total_counts: Mapping[str, int],
    min_total: int = 50,
    top_n: Optional[int] = None,
) -> list[OverrepresentationRecord]:
    """Rank lemmas by indel-to-total frequency ratio.

    Only lemmas with at least ``min_total`` total occurrences are kept;
    ties in ratio break lexicographically.
    """
    if min_total < 1:
        raise ValueError(f"min_total must be >= 1, got {min_total}")
    records = [
        OverrepresentationRecord(lemma, n, total_counts[lemma])
        for lemma, n in indel_counts.items()
        if total_counts.get(lemma, 0) >= min_total
    ]
    records.sort(key=lambda r: (-r.ratio, r.lemma))
    return records[:top_n] if top_n is not None else records


def overrepresentation(
    pairs: Sequence[ParaphrasePair],
    min_total: int = 50,
    top_n: Optional[int] = None,
    group_filter: Optional[LabelGroup] = None,
    total_counts: Optional[Mapping[str, int]] = None,
) -> list[OverrepresentationRecord]:
    """Most overrepresented lemmas among indels relative to overall use.

    Totals default to token occurrences over the analyzed pairs' own
    texts; an external frequency table may be supplied instead.
    """
    selected = [p for p in pairs if _in_group(p, group_filter)]
    indel_counts = collect_indel_counts(selected)
    if total_counts is None:
        total_counts = collect_total_counts(selected)
    return rank_overrepresentation(indel_counts, total_counts, min_total, top_n)


def accounting_rates(
    pairs: Sequence[ParaphrasePair],
    lexicon: SynonymLexicon,
    group_filter: Optional[LabelGroup] = None,
) -> tuple[int, int, int]:
    """(full, partial, none) synonym-accounting counts over pairs with
    at least one lemma indel."""
    full = partial = none = 0
    for pair in pairs:
        if not _in_group(pair, group_filter):
            continue
        indel = lemma_indel(pair, content_only=False)
        if indel.is_empty:
            continue
        level = account_indels(indel, lexicon).level
        if level == FULL:
            full += 1
        elif level == NONE:
            none += 1
        else:
            partial += 1
    return full, partial, none


def _alnum_count(texts: Iterable[str]) -> int:
    return sum(1 for text in texts for ch in text if ch.isalnum())


def nonelementary_proportion(
    pair_texts: Iterable[str], source_texts: Iterable[str]
) -> float:
    """Share of source alphanumeric characters ending up in pair texts.

    Characters are counted by Unicode letter/digit classes, so
    punctuation and whitespace never affect the result.
    """
    source_total = _alnum_count(source_texts)
    if source_total == 0:
        raise InputError("source material has no alphanumeric characters")
    return _alnum_count(pair_texts) / source_total


def mean_token_length(segments: Sequence[ParsedSegment]) -> float:
    """Mean non-punctuation token count per segment; 0.0 when empty."""
    if not segments:
        return 0.0
    return sum(len(s.content_tokens()) for s in segments) / len(segments)
