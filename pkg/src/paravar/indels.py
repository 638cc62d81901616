"""Lemma insertion/deletion analysis between the two sides of a pair.

The core quantity is the symmetric multiset difference of lemmas (the
"lemma indel"): lemmas present on one side but not the other, counted
with multiplicity.  Punctuation never participates.  A content-only
variant additionally drops words whose dependency relation is treated
as functional by the CLAS parsing metric, so only content-bearing words
are compared.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .corpus import ParaphrasePair, Token

# Relations deemed functional by the Content-Word Labeled Attachment
# Score.  Matching is on the full relation string, so subtypes such as
# aux:pass are listed explicitly.
CLAS_FUNCTIONAL_RELATIONS = frozenset(
    {
        "aux",
        "aux:pass",
        "case",
        "cc",
        "clf",
        "cop",
        "det",
        "mark",
        "punct",
        "cc:preconj",
        "cop:own",
    }
)


@dataclass(frozen=True)
class FunctionalRelations:
    """The set of dependency relations ignored in content-only comparison."""

    relations: frozenset[str] = CLAS_FUNCTIONAL_RELATIONS

    def __post_init__(self):
        if not self.relations:
            raise ValueError("functional relation set must not be empty")
        if "punct" not in self.relations:
            raise ValueError("functional relation set must contain 'punct'")

    def __contains__(self, deprel: str) -> bool:
        return deprel in self.relations


DEFAULT_FUNCTIONAL = FunctionalRelations()

# Minimal legal set: punctuation only, i.e. no functional filtering
# beyond what every comparison already excludes.
PUNCT_ONLY_FUNCTIONAL = FunctionalRelations(frozenset({"punct"}))


@dataclass(frozen=True)
class LemmaIndel:
    """Multisets of lemmas unique to each side of a pair."""

    only_in_side1: Counter
    only_in_side2: Counter

    @property
    def size(self) -> int:
        return sum(self.only_in_side1.values()) + sum(self.only_in_side2.values())

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    def swapped(self) -> "LemmaIndel":
        return LemmaIndel(self.only_in_side2, self.only_in_side1)


def comparison_lemma(token: Token) -> str:
    """Lemma as compared: compound-boundary markers stripped, case kept."""
    stripped = token.lemma.replace("#", "")
    return stripped if stripped else token.lemma


def _comparable_tokens(
    tokens: Iterable[Token], content_only: bool, funcs: FunctionalRelations
) -> list[Token]:
    kept = [t for t in tokens if not t.is_punctuation]
    if content_only:
        kept = [t for t in kept if t.deprel not in funcs]
    return kept


def lemma_multiset(
    tokens: Iterable[Token],
    content_only: bool = False,
    funcs: FunctionalRelations = DEFAULT_FUNCTIONAL,
) -> Counter:
    """Multiset of comparison lemmas over the non-excluded tokens."""
    return Counter(
        comparison_lemma(t) for t in _comparable_tokens(tokens, content_only, funcs)
    )


def lemma_indel(
    pair: ParaphrasePair,
    content_only: bool = False,
    funcs: FunctionalRelations = DEFAULT_FUNCTIONAL,
) -> LemmaIndel:
    """Symmetric multiset difference of lemmas between the pair's sides.

    Punctuation (upos PUNCT or deprel punct) is always excluded; with
    ``content_only`` the functional relations in ``funcs`` are excluded
    as well.
    """
    side1 = lemma_multiset(pair.side1.tokens, content_only, funcs)
    side2 = lemma_multiset(pair.side2.tokens, content_only, funcs)
    return LemmaIndel(only_in_side1=side1 - side2, only_in_side2=side2 - side1)


def indel_count(pair: ParaphrasePair) -> int:
    """Total lemma indels of the pair (punctuation excluded, content kept)."""
    return lemma_indel(pair, content_only=False).size


class ZeroIndelKind(Enum):
    """Subtypes of pairs whose lemma multisets are identical."""

    REORDERING = "reordering"
    SAME_LEMMA_SAME_ORDER = "same_lemma_same_order"
    SAME_LEMMA_DIFFERENT_ORDER = "same_lemma_different_order"


def zero_indel_subtype(pair: ParaphrasePair) -> ZeroIndelKind:
    """Categorize a zero-indel pair.

    Reordering: the sides contain the same surface words (case-folded,
    punctuation excluded) in a different order.  Same lemma, same order:
    the lemma sequences agree position by position, so only inflection
    differs.  Otherwise the lemmas were both reordered and re-inflected.
    """
    if indel_count(pair) != 0:
        raise ValueError("zero_indel_subtype requires a pair with zero lemma indels")

    side1 = [t for t in pair.side1.tokens if not t.is_punctuation]
    side2 = [t for t in pair.side2.tokens if not t.is_punctuation]

    surfaces1 = [t.surface.casefold() for t in side1]
    surfaces2 = [t.surface.casefold() for t in side2]
    if Counter(surfaces1) == Counter(surfaces2) and surfaces1 != surfaces2:
        return ZeroIndelKind.REORDERING

    lemmas1 = [comparison_lemma(t) for t in side1]
    lemmas2 = [comparison_lemma(t) for t in side2]
    if lemmas1 == lemmas2:
        return ZeroIndelKind.SAME_LEMMA_SAME_ORDER
    return ZeroIndelKind.SAME_LEMMA_DIFFERENT_ORDER
