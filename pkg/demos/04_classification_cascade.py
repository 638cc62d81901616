#!/usr/bin/env python3
"""The seven-way automatic variation cascade, pair by pair.

First match wins: zero-indel subtypes, then full synonym accounting,
then the functional-word filter, then synonym accounting on the
filtered indel, and finally "other" for everything unexplained.
"""

from paravar import (
    EmbeddingTable,
    LabelGroup,
    build_lexicon,
    classify,
    classify_corpus,
)
from paravar.classify import CLASS_ORDER

from demo_pairs import DEMO_PAIRS

lexicon = build_lexicon(
    EmbeddingTable.from_dict({}),
    [("vasta", "hiljattain"), ("juosta", "kiiruhtaa")],
)

print("== Per-pair cascade decisions ==")
for pair in DEMO_PAIRS:
    got = classify(pair, lexicon)
    print(f"  {pair.id:10s} {pair.side1.text!r:38s} / {pair.side2.text!r:42s} -> {got.value}")

print("\n== Corpus counts (universal group) ==")
report = classify_corpus(DEMO_PAIRS, lexicon, group_filter=LabelGroup.UNIVERSAL)
for cls in CLASS_ORDER:
    print(f"  {cls.value:28s} {report.counts[cls]:3d}  ({report.ratio(cls):.0%})")
print(f"  total {report.total}, synonym-accountable (raw) {report.synonym_accountable}")
