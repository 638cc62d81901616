import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from paravar.indels import (
    DEFAULT_FUNCTIONAL,
    FunctionalRelations,
    ZeroIndelKind,
    indel_count,
    lemma_indel,
    zero_indel_subtype,
)

from conftest import LEMMAS, SUFFIXES, make_pair, random_words
from oracles import multiset_diff_oracle

TABLE5_PAIR = make_pair(
    [("Vasta", "vasta", "ADV", "advmod"), ("ammuttu", "ampua", "VERB", "root")],
    [("Ammuttu", "ampua", "VERB", "root"), ("hiljattain", "hiljattain", "ADV", "advmod")],
)


class TestLemmaIndel:
    def test_identical_sides_empty(self):
        words = [("iso", "iso"), ("talo", "talo")]
        indel = lemma_indel(make_pair(words, words))
        assert indel.is_empty
        assert indel.size == 0

    def test_symmetric_difference(self):
        indel = lemma_indel(TABLE5_PAIR)
        assert indel.only_in_side1 == Counter({"vasta": 1})
        assert indel.only_in_side2 == Counter({"hiljattain": 1})

    def test_punctuation_always_excluded(self):
        pair = make_pair(
            [("iso", "iso"), (".", ".", "PUNCT", "punct")],
            [("iso", "iso"), ("!", "!", "PUNCT", "punct"), ("?", "?", "PUNCT", "punct")],
        )
        assert lemma_indel(pair).is_empty

    def test_punct_deprel_alone_suffices(self):
        pair = make_pair(
            [("iso", "iso"), ("-", "-", "SYM", "punct")],
            [("iso", "iso")],
        )
        assert lemma_indel(pair).is_empty

    def test_functional_filter_drops_aux(self):
        pair = make_pair(
            [("juoksen", "juosta", "VERB", "root")],
            [("olen", "olla", "AUX", "aux"), ("juossut", "juosta", "VERB", "root")],
        )
        assert lemma_indel(pair, content_only=False).size == 1
        assert lemma_indel(pair, content_only=True).is_empty

    def test_functional_match_includes_subtype(self):
        pair = make_pair(
            [("ammuttu", "ampua", "VERB", "root")],
            [("on", "olla", "AUX", "aux:pass"), ("ammuttu", "ampua", "VERB", "root")],
        )
        assert lemma_indel(pair, content_only=True).is_empty
        # an unlisted subtype is not functional
        narrower = FunctionalRelations(frozenset({"aux", "punct"}))
        assert lemma_indel(pair, content_only=True, funcs=narrower).size == 1

    def test_compound_marker_stripped(self):
        pair = make_pair(
            [("maailma", "maa#ilma")],
            [("maailma", "maailma")],
        )
        assert lemma_indel(pair).is_empty

    def test_lemma_comparison_case_sensitive(self):
        pair = make_pair([("Suomi", "Suomi", "PROPN")], [("suomi", "suomi")])
        assert lemma_indel(pair).size == 2

    def test_multiset_semantics_counts_duplicates(self):
        pair = make_pair(
            [("iso", "iso"), ("iso", "iso"), ("talo", "talo")],
            [("iso", "iso"), ("talo", "talo")],
        )
        indel = lemma_indel(pair)
        assert indel.only_in_side1 == Counter({"iso": 1})
        assert indel.only_in_side2 == Counter()


class TestIndelCount:
    def test_identical_zero(self):
        words = [("iso", "iso")]
        assert indel_count(make_pair(words, words)) == 0

    def test_table5_pair_two(self):
        assert indel_count(TABLE5_PAIR) == 2

    def test_duplicate_lemma_counts_once(self):
        pair = make_pair(
            [("sana", "sana"), ("sana", "sana")],
            [("sana", "sana")],
        )
        assert indel_count(pair) == 1


# Functional words get their own lemma alphabet: a lemma that is an
# auxiliary on one side and a content word on the other would break
# the content-only monotonicity property below.
FUNC_LEMMAS = ["olla", "ei", "ja", "se"]


def words_strategy(max_len=20):
    lemma = st.sampled_from(LEMMAS)
    func_lemma = st.sampled_from(FUNC_LEMMAS)
    return st.lists(
        st.one_of(
            st.tuples(lemma, st.sampled_from(SUFFIXES)).map(
                lambda p: (p[0] + p[1], p[0], "NOUN", "obj")
            ),
            st.tuples(func_lemma, st.sampled_from(SUFFIXES)).map(
                lambda p: (p[0] + p[1], p[0], "AUX", "aux")
            ),
            st.just((".", ".", "PUNCT", "punct")),
        ),
        min_size=1,
        max_size=max_len,
    )


class TestProperties:
    @given(words_strategy(), words_strategy())
    def test_matches_sorted_list_oracle(self, words1, words2):
        pair = make_pair(words1, words2)
        indel = lemma_indel(pair)
        expect1, expect2 = multiset_diff_oracle(
            [w[1] for w in words1 if w[2] != "PUNCT"],
            [w[1] for w in words2 if w[2] != "PUNCT"],
        )
        assert sorted(indel.only_in_side1.elements()) == expect1
        assert sorted(indel.only_in_side2.elements()) == expect2

    @given(words_strategy(), words_strategy())
    def test_swapping_sides_swaps_fields(self, words1, words2):
        pair = make_pair(words1, words2)
        forward = lemma_indel(pair)
        backward = lemma_indel(pair.swapped())
        assert forward.only_in_side1 == backward.only_in_side2
        assert forward.only_in_side2 == backward.only_in_side1

    @given(words_strategy(), words_strategy())
    def test_content_only_never_larger(self, words1, words2):
        pair = make_pair(words1, words2)
        full = lemma_indel(pair, content_only=False)
        content = lemma_indel(pair, content_only=True)
        assert content.size <= full.size

    def test_monotonicity_boundary_lemma_functional_on_one_side_only(self):
        # Filtering can unbalance a lemma matched across sides when it
        # is functional on one side only; monotonicity holds only for
        # lemma-consistent functional status.
        pair = make_pair(
            [("on", "olla", "VERB", "root")],
            [("on", "olla", "AUX", "aux")],
        )
        assert lemma_indel(pair, content_only=False).size == 0
        assert lemma_indel(pair, content_only=True).size == 1

    @given(words_strategy(), words_strategy())
    def test_zero_count_iff_equal_multisets(self, words1, words2):
        pair = make_pair(words1, words2)
        only1, only2 = multiset_diff_oracle(
            [w[1] for w in words1 if w[2] != "PUNCT"],
            [w[1] for w in words2 if w[2] != "PUNCT"],
        )
        assert (indel_count(pair) == 0) == (not only1 and not only2)


class TestZeroIndelSubtype:
    def test_reordering(self):
        pair = make_pair(
            [("Talo", "talo"), ("iso", "iso")],
            [("Iso", "iso"), ("talo", "talo")],
        )
        assert zero_indel_subtype(pair) == ZeroIndelKind.REORDERING

    def test_same_lemma_same_order(self):
        pair = make_pair(
            [("juoksen", "juosta", "VERB"), ("kotiin", "koti")],
            [("juoksin", "juosta", "VERB"), ("kotiin", "koti")],
        )
        assert zero_indel_subtype(pair) == ZeroIndelKind.SAME_LEMMA_SAME_ORDER

    def test_same_lemma_different_order(self):
        pair = make_pair(
            [("talon", "talo"), ("iso", "iso")],
            [("isoa", "iso"), ("talo", "talo")],
        )
        assert zero_indel_subtype(pair) == ZeroIndelKind.SAME_LEMMA_DIFFERENT_ORDER

    def test_identical_sides_are_same_order(self):
        words = [("iso", "iso"), ("talo", "talo")]
        assert zero_indel_subtype(make_pair(words, words)) == ZeroIndelKind.SAME_LEMMA_SAME_ORDER

    def test_requires_zero_indel(self):
        with pytest.raises(ValueError):
            zero_indel_subtype(TABLE5_PAIR)

    @settings(max_examples=200)
    @given(st.integers(0, 2**32 - 1))
    def test_exhaustive_over_random_zero_indel_pairs(self, seed):
        generator = random.Random(seed)
        words1 = random_words(generator, max_len=8)
        # permute and re-inflect with the same lemmas: indel stays zero
        words2 = list(words1)
        generator.shuffle(words2)
        words2 = [
            (lemma + generator.choice(SUFFIXES), lemma, upos, deprel)
            if upos != "PUNCT"
            else (surface, lemma, upos, deprel)
            for surface, lemma, upos, deprel in words2
        ]
        pair = make_pair(words1, words2)
        assert indel_count(pair) == 0
        assert zero_indel_subtype(pair) in ZeroIndelKind


class TestFunctionalRelations:
    def test_default_is_clas_set(self):
        for relation in ("aux", "aux:pass", "case", "cc", "clf", "cop", "det",
                         "mark", "punct", "cc:preconj", "cop:own"):
            assert relation in DEFAULT_FUNCTIONAL

    def test_must_contain_punct(self):
        with pytest.raises(ValueError):
            FunctionalRelations(frozenset({"aux"}))

    def test_must_be_nonempty(self):
        with pytest.raises(ValueError):
            FunctionalRelations(frozenset())
