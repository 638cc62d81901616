"""A shared miniature corpus for the demo scripts."""

from paravar import PairLabel, ParaphrasePair, ParsedSegment, Sentence, Token


def _side(words, sid):
    tokens = tuple(
        Token(index=i, surface=s, lemma=l, upos=u, head=0 if i == 1 else 1, deprel=d)
        for i, (s, l, u, d) in enumerate(words, start=1)
    )
    return ParsedSegment((Sentence(sid, " ".join(w[0] for w in words), tokens),))


def _pair(pair_id, words1, words2, base="4", flags=""):
    return ParaphrasePair(
        pair_id,
        _side(words1, f"{pair_id}.1"),
        _side(words2, f"{pair_id}.2"),
        PairLabel.parse(base, flags),
    )


DEMO_PAIRS = [
    _pair(
        "synonym",
        [("Vasta", "vasta", "ADV", "advmod"), ("ammuttu", "ampua", "VERB", "root")],
        [("Ammuttu", "ampua", "VERB", "root"), ("hiljattain", "hiljattain", "ADV", "advmod")],
    ),
    _pair(
        "reorder",
        [("Talo", "talo", "NOUN", "root"), ("iso", "iso", "ADJ", "amod")],
        [("Iso", "iso", "ADJ", "amod"), ("talo", "talo", "NOUN", "root")],
        "4", "s",
    ),
    _pair(
        "inflect",
        [("juoksen", "juosta", "VERB", "root"), ("kotiin", "koti", "NOUN", "obl")],
        [("juoksin", "juosta", "VERB", "root"), ("kotiin", "koti", "NOUN", "obl")],
        "rewrite",
    ),
    _pair(
        "aux_only",
        [("juoksen", "juosta", "VERB", "root")],
        [("olen", "olla", "AUX", "aux"), ("juossut", "juosta", "VERB", "root")],
    ),
    _pair(
        "syn_clas",
        [("Hän", "hän", "PRON", "nsubj"), ("juoksi", "juosta", "VERB", "root")],
        [
            ("Hän", "hän", "PRON", "nsubj"),
            ("oli", "olla", "AUX", "aux"),
            ("kiiruhtanut", "kiiruhtaa", "VERB", "root"),
        ],
    ),
    _pair(
        "unexplained1",
        [("Ole", "olla", "AUX", "root"), ("hiljaa", "hiljaa", "ADV", "advmod")],
        [("Pidä", "pitää", "VERB", "root"), ("pääsi", "pää", "NOUN", "obj"),
         ("kiinni", "kiinni", "ADV", "compound:prt")],
    ),
    _pair(
        "unexplained2",
        [("Jopa", "jopa", "ADV", "advmod"), ("runoja", "runo", "NOUN", "root")],
        [("Runojakin", "runo", "NOUN", "root"), ("vain", "vain", "ADV", "advmod")],
    ),
    _pair(
        "unexplained3",
        [("Anteeksi", "anteeksi", "INTJ", "root"), ("odotus", "odotus", "NOUN", "nmod")],
        [("Anteeksi", "anteeksi", "INTJ", "root"), ("että", "että", "SCONJ", "mark"),
         ("kesti", "kestää", "VERB", "ccomp")],
    ),
    _pair(
        "context",
        [("Kiitos", "kiitos", "INTJ", "root")],
        [("Kiitti", "kiitti", "INTJ", "root")],
        "3",
    ),
]
