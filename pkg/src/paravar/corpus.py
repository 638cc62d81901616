"""Paraphrase corpus ingestion: CoNLL-U parsing, pair manifest, label scheme.

A corpus is distributed as two files:

* a CoNLL-U v2 file holding every parsed sentence, keyed by its
  ``# sent_id =`` comment;
* a tab-separated manifest with one paraphrase pair per row:
  ``pair_id <TAB> side1_ids <TAB> side2_ids <TAB> base_label <TAB> flags``
  where multi-sentence segments join their sentence IDs with ``+`` and
  flags are a string over ``s i < >`` (empty for none).

Labels follow the corpus scheme: ``4`` universal paraphrase, ``3``
context-dependent paraphrase, ``2`` related but not a paraphrase, and
``rewrite`` for pairs edited into fully universal paraphrases.  Flags
subtype label 4: ``s`` style, ``i`` minor meaning difference, ``<``/``>``
one-directional.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import (
    ConlluError,
    DuplicatePairError,
    ManifestError,
    MissingSentenceError,
)

VALID_BASES = ("4", "3", "2", "rewrite")
VALID_FLAGS = ("s", "i", "<", ">")

# Fixed emission order so label strings like "4s" are canonical.
_FLAG_ORDER = {flag: i for i, flag in enumerate(VALID_FLAGS)}


@dataclass(frozen=True)
class Token:
    """One syntactic word of a parsed sentence."""

    index: int
    surface: str
    lemma: str
    upos: str
    feats: dict[str, str] = field(default_factory=dict)
    head: int = 0
    deprel: str = "dep"

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"token index must be >= 1, got {self.index}")
        if self.head < 0:
            raise ValueError(f"token head must be >= 0, got {self.head}")
        if self.head == self.index:
            raise ValueError(f"token {self.index} cannot head itself")
        if not self.surface or not self.lemma:
            raise ValueError(f"token {self.index} has empty surface or lemma")

    def __hash__(self):
        return hash((self.index, self.surface, self.lemma, self.head, self.deprel))

    def __eq__(self, other):
        if not isinstance(other, Token):
            return NotImplemented
        return (
            self.index == other.index
            and self.surface == other.surface
            and self.lemma == other.lemma
            and self.upos == other.upos
            and self.feats == other.feats
            and self.head == other.head
            and self.deprel == other.deprel
        )

    @property
    def is_punctuation(self) -> bool:
        return self.upos == "PUNCT" or self.deprel == "punct"


@dataclass(frozen=True)
class Sentence:
    """A parsed sentence with its corpus-wide ID."""

    sent_id: str
    text: str
    tokens: tuple[Token, ...]

    def __post_init__(self):
        for i, tok in enumerate(self.tokens, start=1):
            if tok.index != i:
                raise ValueError(
                    f"sentence {self.sent_id}: token indices must run 1..n, "
                    f"position {i} holds index {tok.index}"
                )
        n = len(self.tokens)
        for tok in self.tokens:
            if tok.head > n:
                raise ValueError(
                    f"sentence {self.sent_id}: token {tok.index} heads "
                    f"nonexistent token {tok.head}"
                )


@dataclass(frozen=True)
class ParsedSegment:
    """One side of a paraphrase pair: one or more parsed sentences."""

    sentences: tuple[Sentence, ...]

    @property
    def text(self) -> str:
        return " ".join(s.text for s in self.sentences)

    @property
    def tokens(self) -> tuple[Token, ...]:
        return tuple(tok for s in self.sentences for tok in s.tokens)

    def content_tokens(self) -> tuple[Token, ...]:
        """Tokens with punctuation removed."""
        return tuple(t for t in self.tokens if not t.is_punctuation)


@dataclass(frozen=True)
class PairLabel:
    """Corpus label: base category plus optional subtyping flags."""

    base: str
    flags: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.base not in VALID_BASES:
            raise ValueError(f"unknown base label {self.base!r}")
        bad = set(self.flags) - set(VALID_FLAGS)
        if bad:
            raise ValueError(f"unknown flags {sorted(bad)!r}")
        if self.flags and self.base != "4":
            raise ValueError(f"flags are only valid on label 4, not {self.base!r}")

    def __str__(self) -> str:
        if self.base == "rewrite":
            return "rewrite"
        return self.base + "".join(sorted(self.flags, key=_FLAG_ORDER.__getitem__))

    @classmethod
    def parse(cls, base: str, flags: str = "") -> "PairLabel":
        return cls(base=base, flags=frozenset(flags))


@dataclass(frozen=True)
class ParaphrasePair:
    """Two alternative translations of the same content, plus their label."""

    id: str
    side1: ParsedSegment
    side2: ParsedSegment
    label: PairLabel

    def swapped(self) -> "ParaphrasePair":
        return ParaphrasePair(self.id, self.side2, self.side1, self.label)


class LabelGroup(Enum):
    """Coarse grouping of the label scheme."""

    UNIVERSAL = "universal"
    CONTEXT_DEPENDENT = "context_dependent"
    RELATED_NOT_PARAPHRASE = "related_not_paraphrase"


def group_label(label: PairLabel) -> LabelGroup:
    """Assign a label to its group.

    Universal: rewrites and plain/style-flagged 4.  Context-dependent:
    label 3, or 4 carrying any of the ``i``/``<``/``>`` flags.  Related
    but not paraphrase: label 2.
    """
    if label.base == "rewrite":
        return LabelGroup.UNIVERSAL
    if label.base == "4":
        if label.flags & {"i", "<", ">"}:
            return LabelGroup.CONTEXT_DEPENDENT
        return LabelGroup.UNIVERSAL
    if label.base == "3":
        return LabelGroup.CONTEXT_DEPENDENT
    return LabelGroup.RELATED_NOT_PARAPHRASE


@dataclass
class LabelDistribution:
    """Per-group and per-label pair counts."""

    group_counts: dict[LabelGroup, int]
    label_counts: dict[str, int]
    total: int


def label_distribution(pairs: list[ParaphrasePair]) -> LabelDistribution:
    """Count pairs per label group and per canonical label string."""
    groups = Counter(group_label(p.label) for p in pairs)
    labels = Counter(str(p.label) for p in pairs)
    return LabelDistribution(
        group_counts={g: groups.get(g, 0) for g in LabelGroup},
        label_counts=dict(sorted(labels.items())),
        total=len(pairs),
    )


# ---------------------------------------------------------------------------
# CoNLL-U reading and writing
# ---------------------------------------------------------------------------

def parse_feats(feats: str) -> dict[str, str]:
    if feats in ("", "_"):
        return {}
    result = {}
    for item in feats.split("|"):
        key, sep, value = item.partition("=")
        if sep:
            result[key] = value
    return result


def format_feats(feats: dict[str, str]) -> str:
    if not feats:
        return "_"
    return "|".join(f"{k}={v}" for k, v in sorted(feats.items()))


def read_conllu(path: str | Path) -> dict[str, Sentence]:
    """Read a CoNLL-U file into a mapping of sent_id to Sentence.

    Multiword-token ranges (``1-2``) and empty nodes (``3.1``) are
    skipped; only syntactic-word lines are kept.
    """
    sentences: dict[str, Sentence] = {}
    sent_id: str | None = None
    sent_text: str | None = None
    tokens: list[Token] = []
    start_line = 1

    def flush(line_number: int):
        nonlocal sent_id, sent_text, tokens
        if not tokens and sent_id is None:
            return
        if sent_id is None:
            raise ConlluError("sentence block lacks a '# sent_id =' comment", start_line)
        if sent_id in sentences:
            raise ConlluError(f"duplicate sent_id {sent_id!r}", line_number)
        text = sent_text if sent_text is not None else " ".join(t.surface for t in tokens)
        try:
            sentences[sent_id] = Sentence(sent_id, text, tuple(tokens))
        except ValueError as exc:
            raise ConlluError(str(exc), line_number) from exc
        sent_id = None
        sent_text = None
        tokens = []

    with open(path, encoding="utf-8") as handle:
        line_number = 0
        for line_number, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line:
                flush(line_number)
                start_line = line_number + 1
                continue
            if line.startswith("#"):
                if not tokens and sent_id is None:
                    start_line = line_number
                body = line[1:].strip()
                key, sep, value = body.partition("=")
                if sep and key.strip() == "sent_id":
                    sent_id = value.strip()
                elif sep and key.strip() == "text":
                    sent_text = value.strip()
                continue
            cols = line.split("\t")
            if len(cols) != 10:
                raise ConlluError(f"expected 10 columns, got {len(cols)}", line_number)
            if "-" in cols[0] or "." in cols[0]:
                continue
            try:
                index = int(cols[0])
                head = int(cols[6]) if cols[6] != "_" else 0
            except ValueError as exc:
                raise ConlluError(f"bad index or head: {exc}", line_number) from exc
            try:
                tokens.append(
                    Token(
                        index=index,
                        surface=cols[1],
                        lemma=cols[2],
                        upos=cols[3],
                        feats=parse_feats(cols[5]),
                        head=head,
                        deprel=cols[7],
                    )
                )
            except ValueError as exc:
                raise ConlluError(str(exc), line_number) from exc
        flush(line_number + 1)
    return sentences


def write_conllu(sentences: list[Sentence], path: str | Path) -> None:
    """Emit sentences in CoNLL-U format, one block per sentence."""
    with open(path, "w", encoding="utf-8") as handle:
        for sent in sentences:
            handle.write(f"# sent_id = {sent.sent_id}\n")
            handle.write(f"# text = {sent.text}\n")
            for tok in sent.tokens:
                cols = (
                    str(tok.index),
                    tok.surface,
                    tok.lemma,
                    tok.upos,
                    "_",
                    format_feats(tok.feats),
                    str(tok.head),
                    tok.deprel,
                    "_",
                    "_",
                )
                handle.write("\t".join(cols) + "\n")
            handle.write("\n")


# ---------------------------------------------------------------------------
# Manifest reading and writing
# ---------------------------------------------------------------------------

def load_corpus(manifest_path: str | Path, conllu_path: str | Path) -> list[ParaphrasePair]:
    """Load paraphrase pairs from a manifest TSV plus its CoNLL-U file.

    Every manifest row yields exactly one pair, in file order.
    """
    sentences = read_conllu(conllu_path)
    pairs: list[ParaphrasePair] = []
    seen: set[str] = set()

    def segment(ids: str, line_number: int) -> ParsedSegment:
        selected = []
        for sent_id in ids.split("+"):
            sent_id = sent_id.strip()
            if sent_id not in sentences:
                raise MissingSentenceError(
                    f"manifest line {line_number}: unknown sentence ID {sent_id!r}"
                )
            selected.append(sentences[sent_id])
        return ParsedSegment(tuple(selected))

    with open(manifest_path, encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            cols = line.split("\t")
            if len(cols) == 4:
                cols.append("")
            if len(cols) != 5:
                raise ManifestError(
                    f"manifest line {line_number}: expected 4 or 5 columns, got {len(cols)}"
                )
            pair_id, ids1, ids2, base, flags = cols
            if pair_id in seen:
                raise DuplicatePairError(
                    f"manifest line {line_number}: duplicate pair ID {pair_id!r}"
                )
            seen.add(pair_id)
            try:
                label = PairLabel.parse(base, flags)
            except ValueError as exc:
                raise ManifestError(f"manifest line {line_number}: {exc}") from exc
            pairs.append(
                ParaphrasePair(
                    id=pair_id,
                    side1=segment(ids1, line_number),
                    side2=segment(ids2, line_number),
                    label=label,
                )
            )
    return pairs


def save_corpus(
    pairs: list[ParaphrasePair], manifest_path: str | Path, conllu_path: str | Path
) -> None:
    """Re-emit pairs as manifest + CoNLL-U; inverse of :func:`load_corpus`."""
    sentences: dict[str, Sentence] = {}
    rows = []
    for pair in pairs:
        for segment in (pair.side1, pair.side2):
            for sent in segment.sentences:
                sentences.setdefault(sent.sent_id, sent)
        flags = "".join(sorted(pair.label.flags, key=_FLAG_ORDER.__getitem__))
        rows.append(
            "\t".join(
                (
                    pair.id,
                    "+".join(s.sent_id for s in pair.side1.sentences),
                    "+".join(s.sent_id for s in pair.side2.sentences),
                    pair.label.base,
                    flags,
                )
            )
        )
    write_conllu(list(sentences.values()), conllu_path)
    with open(manifest_path, "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(row + "\n")
