"""Shared fixture builders and random corpus generators."""

from __future__ import annotations

import random

import pytest

from paravar.corpus import PairLabel, ParaphrasePair, ParsedSegment, Sentence, Token

# Small alphabets so random pairs collide often enough to hit every
# branch of the analysis.
LEMMAS = [f"w{i}" for i in range(12)]
SUFFIXES = ["", "a", "n", "ssa", "lla", "ksi"]
UPOS_TAGS = ["NOUN", "VERB", "ADJ", "ADV", "PRON"]
CONTENT_DEPRELS = ["nsubj", "obj", "advmod", "nmod", "xcomp", "conj"]
FUNCTIONAL_DEPRELS = ["aux", "case", "cc", "cop", "det", "mark"]


def make_sentence(words, sent_id="s1"):
    """Build a sentence from (surface[, lemma[, upos[, deprel]]]) tuples."""
    tokens = []
    for i, spec in enumerate(words, start=1):
        spec = (spec,) if isinstance(spec, str) else tuple(spec)
        surface = spec[0]
        lemma = spec[1] if len(spec) > 1 else surface.lower()
        upos = spec[2] if len(spec) > 2 else "NOUN"
        deprel = spec[3] if len(spec) > 3 else ("root" if i == 1 else "dep")
        tokens.append(
            Token(
                index=i,
                surface=surface,
                lemma=lemma,
                upos=upos,
                head=0 if i == 1 else 1,
                deprel=deprel,
            )
        )
    text = " ".join(t.surface for t in tokens)
    return Sentence(sent_id, text, tuple(tokens))


def make_segment(words, sent_id="s1"):
    return ParsedSegment((make_sentence(words, sent_id),))


def make_pair(words1, words2, base="4", flags="", pair_id="p1"):
    return ParaphrasePair(
        id=pair_id,
        side1=make_segment(words1, f"{pair_id}.1"),
        side2=make_segment(words2, f"{pair_id}.2"),
        label=PairLabel.parse(base, flags),
    )


def random_words(rng: random.Random, max_len: int = 20, punct_rate: float = 0.15):
    """Random word tuples for make_sentence, mixing content, functional
    and punctuation tokens."""
    n = rng.randint(1, max_len)
    words = []
    for _ in range(n):
        roll = rng.random()
        if roll < punct_rate:
            words.append((rng.choice([".", ",", "!"]), rng.choice([".", ",", "!"]), "PUNCT", "punct"))
        elif roll < punct_rate + 0.2:
            lemma = rng.choice(LEMMAS)
            words.append((lemma + rng.choice(SUFFIXES), lemma, "AUX", rng.choice(FUNCTIONAL_DEPRELS)))
        else:
            lemma = rng.choice(LEMMAS)
            words.append(
                (lemma + rng.choice(SUFFIXES), lemma, rng.choice(UPOS_TAGS), rng.choice(CONTENT_DEPRELS))
            )
    return words


def random_pair(rng: random.Random, pair_id: str, max_len: int = 20) -> ParaphrasePair:
    base = rng.choice(["4", "4", "4", "3", "2", "rewrite"])
    flags = ""
    if base == "4" and rng.random() < 0.3:
        flags = "".join(rng.sample(["s", "i", "<", ">"], rng.randint(1, 2)))
    side1 = random_words(rng, max_len)
    if rng.random() < 0.25:
        # perturb side1 so zero-indel branches come up regularly
        side2 = list(side1)
        rng.shuffle(side2)
        if rng.random() < 0.5 and side2:
            surface, lemma, upos, deprel = side2[0]
            side2[0] = (lemma + rng.choice(SUFFIXES), lemma, upos, deprel)
    else:
        side2 = random_words(rng, max_len)
    return make_pair(side1, side2, base, flags, pair_id)


@pytest.fixture
def rng():
    return random.Random(20260809)


def write_fixture_corpus(root) -> dict:
    """Write a small on-disk corpus covering every variation class,
    plus synonym resources and a parallel corpus; returns the paths."""
    from paravar.corpus import save_corpus

    pairs = [
        make_pair(
            [("Vasta", "vasta", "ADV", "advmod"), ("ammuttu", "ampua", "VERB", "root")],
            [("Ammuttu", "ampua", "VERB", "root"), ("hiljattain", "hiljattain", "ADV", "advmod")],
            "4", "", "syn",
        ),
        make_pair(
            [("Talo", "talo"), ("iso", "iso")],
            [("Iso", "iso"), ("talo", "talo")],
            "4", "s", "reorder",
        ),
        make_pair(
            [("juoksen", "juosta", "VERB", "root")],
            [("olen", "olla", "AUX", "aux"), ("juossut", "juosta", "VERB", "root")],
            "rewrite", "", "clas",
        ),
        make_pair([("kissa", "kissa")], [("koira", "koira")], "4", "", "other1"),
        make_pair([("yksi", "yksi")], [("kaksi", "kaksi")], "4", "", "other2"),
        make_pair([("kolme", "kolme")], [("neljä", "neljä")], "4", "", "other3"),
        make_pair([("yhdeksän", "yhdeksän")], [("kymmenen", "kymmenen")], "4", "", "other4"),
        make_pair([("sata", "sata")], [("tuhat", "tuhat")], "4", "", "other5"),
        make_pair([("viisi", "viisi")], [("kuusi", "kuusi")], "3", "", "ctx"),
        make_pair([("seitsemän", "seitsemän")], [("kahdeksan", "kahdeksan")], "2", "", "rel"),
    ]
    manifest = root / "pairs.tsv"
    conllu = root / "pairs.conllu"
    save_corpus(pairs, manifest, conllu)

    embeddings = root / "lemmas.vec"
    embeddings.write_text(
        "4 2\nvasta 1.0 0.0\nhiljattain 0.9 0.1\nkissa 0.0 1.0\nkoira 0.1 1.0\n",
        encoding="utf-8",
    )
    wordnet = root / "wordnet.tsv"
    wordnet.write_text("vasta\thiljattain\n", encoding="utf-8")

    parallel_source = root / "parallel.en"
    parallel_target = root / "parallel.fi"
    parallel_source.write_text(
        "Just shot\nJust shot\nOne\nTwo\n", encoding="utf-8"
    )
    parallel_target.write_text(
        "Vasta ammuttu\nAmmuttu hiljattain\nyksi\nkaksi\n", encoding="utf-8"
    )
    source_text = root / "subtitles.txt"
    source_text.write_text(
        "Vasta ammuttu. Ammuttu hiljattain. Talo iso, iso talo. "
        "Juoksen kotiin nyt heti. Paljon muuta tekstiä jota ei poimittu pariksi. "
        "Vielä enemmän rivejä täytteeksi, jotta osuus pysyy alle yhden.",
        encoding="utf-8",
    )
    return {
        "pairs": pairs,
        "manifest": manifest,
        "conllu": conllu,
        "embeddings": embeddings,
        "wordnet": wordnet,
        "parallel_source": parallel_source,
        "parallel_target": parallel_target,
        "source_text": source_text,
    }


@pytest.fixture
def fixture_corpus(tmp_path):
    return write_fixture_corpus(tmp_path)
