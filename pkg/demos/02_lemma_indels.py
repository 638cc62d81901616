#!/usr/bin/env python3
"""Lemma indels: what words differ between two alternative translations.

The indel of a pair is the symmetric multiset difference of the two
sides' lemmas, punctuation excluded.  Pairs with zero indels split into
reordering / inflection-only subtypes; for the rest, a content-only
variant disregards functional words (auxiliaries, adpositions, ...)
before comparing.
"""

from paravar import (
    DEFAULT_FUNCTIONAL,
    PairLabel,
    ParaphrasePair,
    ParsedSegment,
    Sentence,
    Token,
    indel_count,
    lemma_indel,
    zero_indel_subtype,
)


def pair_of(words1, words2, pair_id="demo"):
    def side(words, sid):
        tokens = tuple(
            Token(index=i, surface=s, lemma=l, upos=u, head=0 if i == 1 else 1, deprel=d)
            for i, (s, l, u, d) in enumerate(words, start=1)
        )
        return ParsedSegment((Sentence(sid, " ".join(w[0] for w in words), tokens),))

    return ParaphrasePair(pair_id, side(words1, "a"), side(words2, "b"), PairLabel.parse("4"))


print("== Basic indel ==")
pair = pair_of(
    [("Vasta", "vasta", "ADV", "advmod"), ("ammuttu", "ampua", "VERB", "root")],
    [("Ammuttu", "ampua", "VERB", "root"), ("hiljattain", "hiljattain", "ADV", "advmod")],
)
indel = lemma_indel(pair)
print(f"  {pair.side1.text!r} vs {pair.side2.text!r}")
print(f"  only in side 1: {dict(indel.only_in_side1)}")
print(f"  only in side 2: {dict(indel.only_in_side2)}")
print(f"  indel count:    {indel_count(pair)}")

print("\n== Zero-indel subtypes ==")
reorder = pair_of(
    [("Talo", "talo", "NOUN", "root"), ("iso", "iso", "ADJ", "amod")],
    [("Iso", "iso", "ADJ", "amod"), ("talo", "talo", "NOUN", "root")],
)
inflect = pair_of(
    [("juoksen", "juosta", "VERB", "root"), ("kotiin", "koti", "NOUN", "obl")],
    [("juoksin", "juosta", "VERB", "root"), ("kotiin", "koti", "NOUN", "obl")],
)
for name, p in (("pure reordering", reorder), ("inflection only", inflect)):
    print(f"  {name:16s} -> {zero_indel_subtype(p).value}")

print("\n== Functional-word filtering ==")
aux_pair = pair_of(
    [("juoksen", "juosta", "VERB", "root")],
    [("olen", "olla", "AUX", "aux"), ("juossut", "juosta", "VERB", "root")],
)
full = lemma_indel(aux_pair, content_only=False)
content = lemma_indel(aux_pair, content_only=True)
print(f"  {aux_pair.side1.text!r} vs {aux_pair.side2.text!r}")
print(f"  full indel size:         {full.size}  ({dict(full.only_in_side2)})")
print(f"  content-only indel size: {content.size}")
print(f"  functional relations:    {sorted(DEFAULT_FUNCTIONAL.relations)}")
