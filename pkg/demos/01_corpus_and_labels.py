#!/usr/bin/env python3
"""Build a tiny paraphrase corpus, save and reload it, and group labels.

A corpus lives in two files: a CoNLL-U file with every parsed sentence
and a TSV manifest listing one pair per row (pair id, sentence IDs of
each side joined by '+', base label, flags).  This demo writes both,
loads them back, and prints the label-group totals.
"""

import tempfile
from pathlib import Path

from paravar import (
    LabelGroup,
    PairLabel,
    ParaphrasePair,
    ParsedSegment,
    Sentence,
    Token,
    group_label,
    label_distribution,
    load_corpus,
    save_corpus,
)


def sentence(sent_id, words):
    """words: list of (surface, lemma, upos, deprel)."""
    tokens = tuple(
        Token(index=i, surface=s, lemma=l, upos=u, head=0 if i == 1 else 1, deprel=d)
        for i, (s, l, u, d) in enumerate(words, start=1)
    )
    return Sentence(sent_id, " ".join(w[0] for w in words), tokens)


pairs = [
    ParaphrasePair(
        id="demo-1",
        side1=ParsedSegment((sentence("s1", [
            ("Vasta", "vasta", "ADV", "advmod"),
            ("ammuttu", "ampua", "VERB", "root"),
        ]),)),
        side2=ParsedSegment((sentence("s2", [
            ("Ammuttu", "ampua", "VERB", "root"),
            ("hiljattain", "hiljattain", "ADV", "advmod"),
        ]),)),
        label=PairLabel.parse("4"),
    ),
    ParaphrasePair(
        id="demo-2",
        side1=ParsedSegment((sentence("s3", [("Runojakin", "runo", "NOUN", "root")]),)),
        side2=ParsedSegment((sentence("s4", [
            ("Jopa", "jopa", "ADV", "advmod"),
            ("runoja", "runo", "NOUN", "root"),
        ]),)),
        label=PairLabel.parse("4", "s"),
    ),
    ParaphrasePair(
        id="demo-3",
        side1=ParsedSegment((sentence("s5", [("Kiitos", "kiitos", "INTJ", "root")]),)),
        side2=ParsedSegment((sentence("s6", [("Kiitti", "kiitti", "INTJ", "root")]),)),
        label=PairLabel.parse("3"),
    ),
]

print("== Pairs ==")
for pair in pairs:
    print(f"  {pair.id} [{pair.label}] {pair.side1.text!r} / {pair.side2.text!r}")

# Every valid label falls in exactly one of three groups.
print("\n== Label groups ==")
for pair in pairs:
    print(f"  {pair.label} -> {group_label(pair.label).value}")

with tempfile.TemporaryDirectory() as tmp:
    manifest = Path(tmp) / "pairs.tsv"
    conllu = Path(tmp) / "pairs.conllu"
    save_corpus(pairs, manifest, conllu)
    print("\n== Manifest on disk ==")
    print(manifest.read_text(encoding="utf-8"))

    reloaded = load_corpus(manifest, conllu)
    print(f"round trip intact: {reloaded == pairs}")

dist = label_distribution(pairs)
print("\n== Distribution ==")
for group in LabelGroup:
    print(f"  {group.value:30s} {dist.group_counts[group]}")
print(f"  per-label: {dist.label_counts}")
