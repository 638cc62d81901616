#!/usr/bin/env python3
"""Build a synonym lexicon and account lemma indels with it.

Two resources feed the lexicon: nearest neighbors in a lemma embedding
space (top 15 by cosine similarity, by default) and wordnet-style
synonym pairs, which are inserted symmetrically.  Accounting then asks
whether a one-to-one synonym matching explains an indel fully,
partially, or not at all.
"""

from collections import Counter

from paravar import (
    EmbeddingTable,
    LemmaIndel,
    account_indels,
    build_lexicon,
    knn_synonyms,
)

# A toy embedding space: "auto" and "vaunu" nearly parallel, "talo" and
# "koti" in another corner, "kissa" off on its own.
table = EmbeddingTable.from_dict(
    {
        "auto": [1.0, 0.0, 0.1],
        "vaunu": [0.95, 0.05, 0.1],
        "talo": [0.0, 1.0, 0.2],
        "koti": [0.05, 0.9, 0.2],
        "kissa": [0.3, 0.3, -1.0],
    }
)

print("== Nearest neighbors ==")
for lemma in table.lemmas:
    print(f"  {lemma:6s} -> {knn_synonyms(table, lemma, k=2)}")

print("\n== Merged lexicon ==")
wordnet_pairs = [("auto", "kulkuneuvo"), ("talo", "rakennus")]
lexicon = build_lexicon(table, wordnet_pairs, k=1)
for lemma in ("auto", "kulkuneuvo", "talo"):
    entries = {
        synonym: "+".join(sorted(lexicon.provenance(lemma, synonym)))
        for synonym in sorted(lexicon.synonyms(lemma))
    }
    print(f"  {lemma:12s} -> {entries}")

print("\n== Accounting an indel ==")
indel = LemmaIndel(
    only_in_side1=Counter({"auto": 1, "kissa": 1}),
    only_in_side2=Counter({"vaunu": 1, "koira": 1}),
)
result = account_indels(indel, lexicon)
print(f"  side1-only {dict(indel.only_in_side1)}, side2-only {dict(indel.only_in_side2)}")
print(f"  level:   {result.level}")
print(f"  matched: {result.matched_pairs}")
print(f"  residual: {sorted(result.residual.only_in_side1)} / "
      f"{sorted(result.residual.only_in_side2)}")

print("\n== Matching is one-to-one ==")
# one 'c' cannot account for two 'a's
lex2 = build_lexicon(EmbeddingTable.from_dict({}), [("a", "c")])
double = LemmaIndel(Counter({"a": 2}), Counter({"c": 1}))
print(f"  {account_indels(double, lex2).level} "
      f"(matched {account_indels(double, lex2).match_count} of 2)")
