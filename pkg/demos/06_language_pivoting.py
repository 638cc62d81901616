#!/usr/bin/env python3
"""Language pivoting: find pairs that share a source-language segment.

The index maps normalized target text to source-segment IDs, where a
source segment is identified by its normalized text (the same English
line twice with two Finnish translations is one shared source).
"""

from paravar import build_index, match_pairs, normalize

from demo_pairs import DEMO_PAIRS

print("== Normalization ==")
for text in ("Vasta ammuttu!", "ÄITI, tule kotiin...", ""):
    print(f"  {text!r} -> {normalize(text)!r}")

# A miniature aligned corpus: 'Just shot' occurs twice with the two
# translations of the "synonym" demo pair; other lines are fillers.
ALIGNED = [
    ("Just shot", "Vasta ammuttu"),
    ("Just shot", "Ammuttu hiljattain"),
    ("The house is big", "Talo iso"),
    ("Thanks", "Kiitos"),
    ("Thanks", "Kiitti"),
    ("Good night", "Hyvää yötä"),
]

index = build_index(ALIGNED)
print(f"\n== Index over {index.aligned_lines} aligned lines "
      f"({len(index)} distinct target keys) ==")
for text in ("Vasta ammuttu", "Ammuttu hiljattain", "Kiitos"):
    print(f"  source ids of {text!r}: {sorted(index.source_ids(text))}")

result = match_pairs(DEMO_PAIRS, index)
print("\n== Matching ==")
print(f"  matched pairs: {result.matched_ids}")
print(f"  match rate:    {result.match_rate:.1%} of {result.total} eligible pairs"
      " (rewrites excluded)")
print(f"  mean length:   matched {result.mean_length_matched:.1f} tokens"
      f" vs all {result.mean_length_all:.1f} tokens")
