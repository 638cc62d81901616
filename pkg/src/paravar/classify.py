"""Seven-way automatic classification of paraphrase variation.

The cascade, first match wins:

1. zero lemma indels: split into reordering / same lemma, same order /
   same lemma, different order;
2. every indel accounted by one-to-one synonyms: ``synonym``;
3. indel empty once functional words are disregarded: ``clas``;
4. the functional-filtered indel fully synonym-accounted:
   ``synonym_plus_clas``;
5. everything else: ``other``.

Steps 2-4 are reorderable through ``steps`` so alternative orderings of
the synonym and functional-filter tests can be explored.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .corpus import LabelGroup, ParaphrasePair, group_label
from .indels import (
    DEFAULT_FUNCTIONAL,
    FunctionalRelations,
    ZeroIndelKind,
    lemma_indel,
    zero_indel_subtype,
)
from .synonymy import FULL, SynonymLexicon, account_indels


class VariationClass(Enum):
    REORDERING = "reordering"
    SAME_LEMMA_SAME_ORDER = "same_lemma_same_order"
    SAME_LEMMA_DIFFERENT_ORDER = "same_lemma_different_order"
    CLAS = "clas"
    SYNONYM = "synonym"
    SYNONYM_PLUS_CLAS = "synonym_plus_clas"
    OTHER = "other"


_ZERO_INDEL_CLASS = {
    ZeroIndelKind.REORDERING: VariationClass.REORDERING,
    ZeroIndelKind.SAME_LEMMA_SAME_ORDER: VariationClass.SAME_LEMMA_SAME_ORDER,
    ZeroIndelKind.SAME_LEMMA_DIFFERENT_ORDER: VariationClass.SAME_LEMMA_DIFFERENT_ORDER,
}

# Step names for the configurable part of the cascade.
STEP_SYNONYM = "synonym"
STEP_CLAS = "clas"
STEP_SYNONYM_CLAS = "synonym_clas"
DEFAULT_CASCADE: tuple[str, ...] = (STEP_SYNONYM, STEP_CLAS, STEP_SYNONYM_CLAS)

# Display order of classification reports.
CLASS_ORDER: tuple[VariationClass, ...] = (
    VariationClass.REORDERING,
    VariationClass.SAME_LEMMA_SAME_ORDER,
    VariationClass.SAME_LEMMA_DIFFERENT_ORDER,
    VariationClass.CLAS,
    VariationClass.SYNONYM,
    VariationClass.SYNONYM_PLUS_CLAS,
    VariationClass.OTHER,
)


def classify(
    pair: ParaphrasePair,
    lexicon: SynonymLexicon,
    funcs: FunctionalRelations = DEFAULT_FUNCTIONAL,
    steps: Sequence[str] = DEFAULT_CASCADE,
) -> VariationClass:
    """Classify one pair through the cascade."""
    full_indel = lemma_indel(pair, content_only=False, funcs=funcs)
    if full_indel.is_empty:
        return _ZERO_INDEL_CLASS[zero_indel_subtype(pair)]

    content_indel = None
    for step in steps:
        if step == STEP_SYNONYM:
            if account_indels(full_indel, lexicon).level == FULL:
                return VariationClass.SYNONYM
        elif step == STEP_CLAS:
            content_indel = lemma_indel(pair, content_only=True, funcs=funcs)
            if content_indel.is_empty:
                return VariationClass.CLAS
        elif step == STEP_SYNONYM_CLAS:
            if content_indel is None:
                content_indel = lemma_indel(pair, content_only=True, funcs=funcs)
            if account_indels(content_indel, lexicon).level == FULL:
                return VariationClass.SYNONYM_PLUS_CLAS
        else:
            raise ValueError(f"unknown cascade step {step!r}")
    return VariationClass.OTHER


@dataclass
class ClassificationReport:
    """Class counts over a (possibly group-filtered) corpus.

    ``synonym_accountable`` is the raw number of nonzero-indel pairs
    whose full indel is synonym-accounted, independent of cascade
    order, so it can be compared against the final ``synonym`` class
    count.
    """

    counts: dict[VariationClass, int]
    total: int
    synonym_accountable: int

    def ratio(self, cls: VariationClass) -> float:
        return self.counts.get(cls, 0) / self.total if self.total else 0.0


def classify_corpus(
    pairs: Sequence[ParaphrasePair],
    lexicon: SynonymLexicon,
    funcs: FunctionalRelations = DEFAULT_FUNCTIONAL,
    group_filter: Optional[LabelGroup] = None,
    steps: Sequence[str] = DEFAULT_CASCADE,
    workers: int = 1,
) -> ClassificationReport:
    """Classify every pair in the given label group and count classes."""
    selected = [
        p for p in pairs if group_filter is None or group_label(p.label) == group_filter
    ]
    classes = _classify_many(selected, lexicon, funcs, steps, workers)

    counts = Counter(classes)
    accountable = 0
    for pair in selected:
        indel = lemma_indel(pair, content_only=False, funcs=funcs)
        if not indel.is_empty and account_indels(indel, lexicon).level == FULL:
            accountable += 1
    return ClassificationReport(
        counts={c: counts.get(c, 0) for c in CLASS_ORDER},
        total=len(selected),
        synonym_accountable=accountable,
    )


def _classify_many(
    pairs: Sequence[ParaphrasePair],
    lexicon: SynonymLexicon,
    funcs: FunctionalRelations,
    steps: Sequence[str],
    workers: int,
) -> list[VariationClass]:
    if workers <= 1 or len(pairs) < 2 * workers:
        return [classify(p, lexicon, funcs, steps) for p in pairs]
    import multiprocessing

    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(
        workers, initializer=_init_worker, initargs=(lexicon, funcs, tuple(steps))
    ) as pool:
        return pool.map(_classify_one, pairs, chunksize=64)


_worker_state: dict = {}


def _init_worker(lexicon, funcs, steps):
    _worker_state["lexicon"] = lexicon
    _worker_state["funcs"] = funcs
    _worker_state["steps"] = steps


def _classify_one(pair: ParaphrasePair) -> VariationClass:
    return classify(
        pair, _worker_state["lexicon"], _worker_state["funcs"], _worker_state["steps"]
    )
