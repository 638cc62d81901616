#!/usr/bin/env python3
"""Corpus statistics: indel histogram, overrepresented lemmas,
accounting rates, variation proportion and length figures."""

from paravar import (
    EmbeddingTable,
    LabelGroup,
    accounting_rates,
    build_lexicon,
    indel_histogram,
    mean_token_length,
    nonelementary_proportion,
    overrepresentation,
)

from demo_pairs import DEMO_PAIRS

lexicon = build_lexicon(
    EmbeddingTable.from_dict({}),
    [("vasta", "hiljattain"), ("juosta", "kiiruhtaa")],
)

print("== Indel-count histogram (universal group) ==")
histogram = indel_histogram(DEMO_PAIRS, LabelGroup.UNIVERSAL)
for count, freq in histogram.items():
    print(f"  {count:2d} indels: {'#' * freq} ({freq})")

print("\n== Most overrepresented lemmas ==")
for record in overrepresentation(DEMO_PAIRS, min_total=2, top_n=5):
    print(
        f"  {record.lemma:10s} ratio {record.ratio:.3f} "
        f"({record.indel_occurrences}/{record.total_occurrences})"
    )

print("\n== Synonym accounting over nonzero-indel pairs ==")
full, partial, none = accounting_rates(DEMO_PAIRS, lexicon)
print(f"  full {full}, partial {partial}, none {none}")

print("\n== Non-elementary variation proportion ==")
pair_texts = [s.text for p in DEMO_PAIRS for s in (p.side1, p.side2)]
source_material = [
    "Vasta ammuttu. Ammuttu hiljattain. Talo iso. Iso talo. "
    "Juoksen kotiin, juoksin kotiin. Hän juoksi. Hän oli kiiruhtanut. "
    "Ole hiljaa! Pidä pääsi kiinni. Jopa runoja, runojakin vain. "
    "Anteeksi odotus. Anteeksi, että kesti. Kiitos. Kiitti. "
    "Ja paljon riviä, joita kukaan ei poiminut talteen mihinkään."
]
proportion = nonelementary_proportion(pair_texts, source_material)
print(f"  {proportion:.1%} of the source characters ended up in pairs")

print("\n== Mean segment length (non-punctuation tokens) ==")
segments = [s for p in DEMO_PAIRS for s in (p.side1, p.side2)]
print(f"  {mean_token_length(segments):.2f} tokens")
