#!/usr/bin/env python3
"""Manual categorization workflow: sample unexplained pairs, record
annotations in a journal, and aggregate category frequencies.

The same store backs the HTTP API (`paravar serve`) used by the web
annotation UI; this demo drives it directly in process.
"""

import tempfile
from pathlib import Path

from paravar import (
    AnnotationRecord,
    AnnotationStore,
    EmbeddingTable,
    ManualCategory,
    build_lexicon,
    category_frequencies,
    sample_unexplained,
    sole_category_rate,
)
from paravar.annotation import utc_now

from demo_pairs import DEMO_PAIRS

lexicon = build_lexicon(
    EmbeddingTable.from_dict({}),
    [("vasta", "hiljattain"), ("juosta", "kiiruhtaa")],
)

print("== Sampling pairs the cascade cannot explain ==")
sample = sample_unexplained(DEMO_PAIRS, lexicon, n=3, seed=7)
for pair in sample:
    print(f"  {pair.id}: {pair.side1.text!r} / {pair.side2.text!r}")

with tempfile.TemporaryDirectory() as tmp:
    journal = Path(tmp) / "annotations.jsonl"
    store = AnnotationStore(journal, [p.id for p in sample])

    print("\n== Recording annotations ==")
    decisions = {
        sample[0].id: {ManualCategory.FIGURATIVE_IDIOM},
        sample[1].id: {ManualCategory.WORD_TO_WORD, ManualCategory.EMPHASIZER},
        sample[2].id: {ManualCategory.WORD_TO_PHRASE},
    }
    for pair_id, categories in decisions.items():
        store.record_annotation(
            AnnotationRecord(
                pair_id=pair_id,
                categories=frozenset(categories),
                annotator="demo",
                timestamp=utc_now(),
            )
        )
        print(f"  {pair_id}: {sorted(c.value for c in categories)}")
    print(f"  next unannotated: {store.next_unannotated()}")

    print("\n== Frequencies (ratio = share of all category assignments) ==")
    for row in category_frequencies(store):
        if row.count:
            print(f"  {row.category.value:22s} {row.count}  ({row.ratio:.0%})")

    w2w = ManualCategory.WORD_TO_WORD
    print(f"\n  sole-category rate of {w2w.value}: "
          f"{sole_category_rate(store, w2w):.0%}")

    print("\n== Journal survives a reload ==")
    reloaded = AnnotationStore(journal, [p.id for p in sample])
    print(f"  {len(reloaded.records())} records after restart")

print("\nFor the browser workflow: paravar sample ... && paravar serve ...")
