"""Synonym lexicon construction and synonym accounting of lemma indels.

The lexicon merges two resources: nearest neighbors of each lemma in an
embedding space (at most 15 by default, ranked by cosine similarity)
and a wordnet-style list of synonym lemma pairs.  Wordnet edges are
symmetric; embedding edges are directed and may be asymmetric.

Accounting asks how much of a lemma indel a lexicon explains: a maximum
one-to-one matching is computed between the two sides, where lemma x
may match lemma y when either direction of the lexicon links them.
One-to-many and phrasal substitutions are out of scope by design.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InputError
from .indels import LemmaIndel

EMBEDDING_SOURCE = "embedding"
WORDNET_SOURCE = "wordnet"


class EmbeddingTable:
    """Lemma vectors of fixed dimensionality with cosine-similarity search."""

    def __init__(self, lemmas: list[str], vectors: np.ndarray):
        vectors = np.asarray(vectors, dtype=np.float64)
        if vectors.ndim != 2 or len(lemmas) != vectors.shape[0]:
            raise ValueError("need one vector per lemma")
        if vectors.size and not np.all(np.isfinite(vectors)):
            raise ValueError("embedding vectors must be finite")
        # a duplicated lemma keeps its first vector; a second row would
        # otherwise show up as its own nearest neighbor
        keep = []
        self._index: dict[str, int] = {}
        for i, lemma in enumerate(lemmas):
            if lemma not in self._index:
                self._index[lemma] = len(keep)
                keep.append(i)
        if len(keep) != len(lemmas):
            lemmas = [lemmas[i] for i in keep]
            vectors = vectors[keep]
        self._lemmas = list(lemmas)
        norms = np.linalg.norm(vectors, axis=1, keepdims=True)
        self._units = vectors / np.where(norms > 0, norms, 1.0)

    @classmethod
    def from_dict(cls, table: dict[str, "np.ndarray | list[float]"]) -> "EmbeddingTable":
        lemmas = list(table)
        vectors = np.array([table[l] for l in lemmas], dtype=np.float64)
        if not lemmas:
            vectors = vectors.reshape(0, 0)
        return cls(lemmas, vectors)

    def __len__(self) -> int:
        return len(self._lemmas)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self._index

    @property
    def dimension(self) -> int:
        return self._units.shape[1]

    @property
    def lemmas(self) -> list[str]:
        return list(self._lemmas)

    def unit_vector(self, lemma: str) -> np.ndarray:
        return self._units[self._index[lemma]]

    def similarities(self, lemma: str) -> np.ndarray:
        """Cosine similarity of ``lemma`` to every table entry."""
        return self._units @ self.unit_vector(lemma)


def knn_synonyms(
    table: EmbeddingTable,
    lemma: str,
    k: int = 15,
    min_similarity: float | None = None,
) -> list[str]:
    """At most ``k`` nearest lemmas by descending cosine similarity.

    The query lemma itself is excluded; ties break lexicographically so
    the ranking is deterministic and prefix-stable in ``k``.  A lemma
    absent from the table yields an empty list.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if lemma not in table:
        return []
    sims = table.similarities(lemma)
    query = table._index[lemma]

    candidates = np.arange(len(sims))
    mask = candidates != query
    if min_similarity is not None:
        mask &= sims >= min_similarity
    candidates = candidates[mask]
    if candidates.size == 0:
        return []

    if k < candidates.size:
        # Keep everything tied with the k-th best, then tie-break below.
        kth = np.partition(sims[candidates], candidates.size - k)[candidates.size - k]
        candidates = candidates[sims[candidates] >= kth]

    ranked = sorted(candidates, key=lambda i: (-sims[i], table._lemmas[i]))
    return [table._lemmas[i] for i in ranked[:k]]


class SynonymLexicon:
    """Directed lemma-to-synonym edges with per-edge provenance."""

    def __init__(self):
        self._edges: dict[str, dict[str, set[str]]] = {}

    def add(self, lemma: str, synonym: str, source: str, symmetric: bool = False) -> None:
        if lemma == synonym:
            return
        self._edges.setdefault(lemma, {}).setdefault(synonym, set()).add(source)
        if symmetric:
            self._edges.setdefault(synonym, {}).setdefault(lemma, set()).add(source)

    def synonyms(self, lemma: str) -> set[str]:
        return set(self._edges.get(lemma, ()))

    def provenance(self, lemma: str, synonym: str) -> set[str]:
        return set(self._edges.get(lemma, {}).get(synonym, ()))

    def are_synonyms(self, x: str, y: str) -> bool:
        """True when either direction of the lexicon links x and y."""
        return y in self._edges.get(x, ()) or x in self._edges.get(y, ())

    def __len__(self) -> int:
        return sum(len(targets) for targets in self._edges.values())

    def __contains__(self, lemma: str) -> bool:
        return lemma in self._edges

    @property
    def lemmas(self) -> set[str]:
        return set(self._edges)


def load_wordnet_pairs(path: str | Path) -> list[tuple[str, str]]:
    """Read a 2-column TSV of synonym lemma pairs."""
    pairs = []
    with open(path, encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            cols = line.split("\t")
            if len(cols) != 2 or not cols[0] or not cols[1]:
                raise InputError(
                    f"wordnet TSV line {line_number}: expected two non-empty columns"
                )
            pairs.append((cols[0], cols[1]))
    return pairs


def build_lexicon(
    table: EmbeddingTable,
    wordnet_pairs: list[tuple[str, str]],
    k: int = 15,
    vocabulary: "set[str] | None" = None,
    min_similarity: float | None = None,
) -> SynonymLexicon:
    """Merge embedding neighbors and wordnet pairs into one lexicon.

    Embedding neighbors are added for every vocabulary lemma (all table
    lemmas when no vocabulary is given); wordnet pairs are inserted in
    both directions.
    """
    lexicon = SynonymLexicon()
    lemmas = sorted(vocabulary) if vocabulary is not None else table.lemmas
    for lemma in lemmas:
        for neighbor in knn_synonyms(table, lemma, k=k, min_similarity=min_similarity):
            lexicon.add(lemma, neighbor, EMBEDDING_SOURCE)
    for left, right in wordnet_pairs:
        lexicon.add(left, right, WORDNET_SOURCE, symmetric=True)
    return lexicon


# ---------------------------------------------------------------------------
# Embedding file formats
# ---------------------------------------------------------------------------

def _parse_header(line: bytes, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise InputError(f"{what}: first line must be 'count dim'")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InputError(f"{what}: bad header {line!r}") from exc


def load_embeddings_text(path: str | Path) -> EmbeddingTable:
    """Load the text embedding format: header line, then lemma + floats."""
    with open(path, "rb") as handle:
        count, dim = _parse_header(handle.readline(), str(path))
        lemmas = []
        rows = np.empty((count, dim), dtype=np.float64)
        for i in range(count):
            line = handle.readline()
            if not line:
                raise InputError(f"{path}: expected {count} rows, got {i}")
            parts = line.rstrip().split(b" ")
            if len(parts) != dim + 1:
                raise InputError(
                    f"{path}: row {i + 1} has {len(parts) - 1} values, expected {dim}"
                )
            lemmas.append(parts[0].decode("utf-8"))
            rows[i] = [float(v) for v in parts[1:]]
    return EmbeddingTable(lemmas, rows)


def load_embeddings_binary(path: str | Path) -> EmbeddingTable:
    """Load the binary embedding format: header line, then per-lemma
    space-terminated word and little-endian float32 vector."""
    with open(path, "rb") as handle:
        count, dim = _parse_header(handle.readline(), str(path))
        lemmas = []
        rows = np.empty((count, dim), dtype=np.float64)
        width = 4 * dim
        for i in range(count):
            word = bytearray()
            while True:
                ch = handle.read(1)
                if not ch:
                    raise InputError(f"{path}: truncated at entry {i + 1}")
                if ch == b" ":
                    break
                if ch != b"\n":
                    word.extend(ch)
            raw = handle.read(width)
            if len(raw) != width:
                raise InputError(f"{path}: truncated vector at entry {i + 1}")
            lemmas.append(word.decode("utf-8"))
            rows[i] = np.frombuffer(raw, dtype="<f4")
    return EmbeddingTable(lemmas, rows)


def load_embeddings(path: str | Path) -> EmbeddingTable:
    """Load an embedding file, auto-detecting text vs binary layout."""
    with open(path, "rb") as handle:
        header = handle.readline()
        count, dim = _parse_header(header, str(path))
        probe = handle.readline()
    if count == 0:
        return EmbeddingTable([], np.empty((0, dim)))
    try:
        parts = probe.decode("utf-8").rstrip().split(" ")
        if len(parts) == dim + 1:
            [float(v) for v in parts[1:]]
            return load_embeddings_text(path)
    except (UnicodeDecodeError, ValueError):
        pass
    return load_embeddings_binary(path)


# ---------------------------------------------------------------------------
# Synonym accounting of indels
# ---------------------------------------------------------------------------

FULL = "full"
PARTIAL = "partial"
NONE = "none"


@dataclass
class AccountingResult:
    """Outcome of matching an indel's sides through the lexicon."""

    level: str
    matched_pairs: list[tuple[str, str]]
    residual: LemmaIndel

    @property
    def match_count(self) -> int:
        return len(self.matched_pairs)


def _expand(multiset: Counter) -> list[str]:
    return sorted(lemma for lemma, n in multiset.items() for _ in range(n))


def _maximum_matching(left: list[str], right: list[str], adjacency: list[list[int]]) -> list[int]:
    """Augmenting-path maximum bipartite matching.

    Returns ``match_right`` where entry j is the left index matched to
    right node j, or -1.  Left nodes and their neighbor lists must be
    pre-sorted for a deterministic result.
    """
    match_right = [-1] * len(right)

    def augment(u: int, visited: list[bool]) -> bool:
        for v in adjacency[u]:
            if visited[v]:
                continue
            visited[v] = True
            if match_right[v] == -1 or augment(match_right[v], visited):
                match_right[v] = u
                return True
        return False

    for u in range(len(left)):
        augment(u, [False] * len(right))
    return match_right


def account_indels(indel: LemmaIndel, lexicon: SynonymLexicon) -> AccountingResult:
    """Explain an indel by one-to-one synonym substitution.

    Computes a maximum one-to-one matching between the two sides where
    an edge exists iff the lexicon links the lemmas in either
    direction.  Level is ``full`` when the matching covers both sides
    entirely (vacuously so for an empty indel), ``none`` when nothing
    matched, ``partial`` otherwise.
    """
    left = _expand(indel.only_in_side1)
    right = _expand(indel.only_in_side2)

    # Canonical orientation: guarantees the mirrored result for the
    # swapped indel, not just an equal-sized one.
    mirrored = (tuple(right), tuple(left)) < (tuple(left), tuple(right))
    a, b = (right, left) if mirrored else (left, right)

    adjacency = [
        [j for j, y in enumerate(b) if lexicon.are_synonyms(x, y)] for x in a
    ]
    match_b = _maximum_matching(a, b, adjacency)

    matched: list[tuple[str, str]] = []
    used_a = set()
    for j, i in enumerate(match_b):
        if i == -1:
            continue
        used_a.add(i)
        matched.append((b[j], a[i]) if mirrored else (a[i], b[j]))
    matched.sort()

    used_b = {j for j, i in enumerate(match_b) if i != -1}
    leftover_a = Counter(x for i, x in enumerate(a) if i not in used_a)
    leftover_b = Counter(y for j, y in enumerate(b) if j not in used_b)
    residual = (
        LemmaIndel(leftover_b, leftover_a) if mirrored else LemmaIndel(leftover_a, leftover_b)
    )

    if residual.is_empty:
        level = FULL
    elif matched:
        level = PARTIAL
    else:
        level = NONE
    return AccountingResult(level=level, matched_pairs=matched, residual=residual)
