"""Acceptance suite: one test per release criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one
pass/fail line per criterion.  Corpus-scale checks against the real
released resources are integration targets: they run only when the
PARAVAR_RESOURCE_DIR environment variable points at a directory
holding the real corpus and resource files.
"""

import filecmp
import json
import os
import random
import signal
import socket
import subprocess
import sys
import time
from collections import Counter
from pathlib import Path

import pytest

from paravar.annotation import AnnotationRecord, AnnotationStore, CATEGORY_ORDER, utc_now
from paravar.classify import CLASS_ORDER, classify
from paravar.cli import EXIT_OK, main
from paravar.corpus import LabelGroup, PairLabel, group_label
from paravar.indels import LemmaIndel, lemma_indel
from paravar.pivot import build_index, match_pairs, normalize
from paravar.stats import nonelementary_proportion, rank_overrepresentation
from paravar.synonymy import SynonymLexicon, WORDNET_SOURCE, account_indels

from conftest import LEMMAS, make_pair, random_pair, random_words, write_fixture_corpus
from oracles import max_matching_size_oracle, multiset_diff_oracle, pivot_match_oracle
from test_pivot import random_parallel_corpus


def report(name: str, passed: bool, detail: str = ""):
    status = "PASS" if passed else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {status}: {name}{suffix}")
    assert passed, f"{name}{suffix}"


class TestCascadePartition:
    def test_thousand_random_pairs_partition_under_five_seconds(self):
        generator = random.Random(101)
        pairs = [random_pair(generator, f"p{i}") for i in range(1000)]
        lexicon = SynonymLexicon()
        for left, right in [(LEMMAS[0], LEMMAS[1]), (LEMMAS[2], LEMMAS[3]), (LEMMAS[4], LEMMAS[5])]:
            lexicon.add(left, right, WORDNET_SOURCE, symmetric=True)

        start = time.perf_counter()
        classes = [classify(pair, lexicon) for pair in pairs]
        elapsed = time.perf_counter() - start

        counts = Counter(classes)
        one_class_each = len(classes) == 1000 and all(c in CLASS_ORDER for c in classes)
        report(
            "cascade partition over 1,000 random pairs",
            one_class_each and sum(counts.values()) == 1000 and elapsed < 5.0,
            f"sum={sum(counts.values())}, elapsed={elapsed:.2f}s",
        )


class TestIndelOracle:
    def test_ten_thousand_random_pairs_match_oracle(self):
        generator = random.Random(202)
        mismatches = 0
        for i in range(10_000):
            words1 = random_words(generator, max_len=20)
            words2 = random_words(generator, max_len=20)
            pair = make_pair(words1, words2)
            indel = lemma_indel(pair)
            expect1, expect2 = multiset_diff_oracle(
                [w[1] for w in words1 if w[2] != "PUNCT"],
                [w[1] for w in words2 if w[2] != "PUNCT"],
            )
            if (
                sorted(indel.only_in_side1.elements()) != expect1
                or sorted(indel.only_in_side2.elements()) != expect2
            ):
                mismatches += 1
        report(
            "lemma indel vs sorted-multiset-difference oracle on 10,000 pairs",
            mismatches == 0,
            f"mismatches={mismatches}",
        )


class TestMatchingOracle:
    def test_thousand_random_indels_match_exhaustive_enumeration(self):
        generator = random.Random(303)
        vocab1 = [f"x{i}" for i in range(8)]
        vocab2 = [f"y{i}" for i in range(8)]
        mismatches = 0
        for _ in range(1000):
            side1 = Counter(generator.choice(vocab1) for _ in range(generator.randint(0, 8)))
            side2 = Counter(generator.choice(vocab2) for _ in range(generator.randint(0, 8)))
            lexicon = SynonymLexicon()
            for x in vocab1:
                for y in vocab2:
                    if generator.random() < 0.3:
                        lexicon.add(x, y, WORDNET_SOURCE, symmetric=generator.random() < 0.5)
            indel = LemmaIndel(side1, side2)
            got = account_indels(indel, lexicon).match_count
            expected = max_matching_size_oracle(
                sorted(side1.elements()), sorted(side2.elements()), lexicon.are_synonyms
            )
            if got != expected:
                mismatches += 1
        report(
            "synonym accounting vs exhaustive maximum-matching oracle on 1,000 indels",
            mismatches == 0,
            f"mismatches={mismatches}",
        )


class TestOverrepresentationArithmetic:
    # the ten most overrepresented lemmas with their indel and total counts
    RANKING_COUNTS = [
        ("tosi", 64, 143),
        ("lakata", 51, 125),
        ("ikävä", 55, 142),
        ("tahtoa", 83, 216),
        ("ihan", 145, 391),
        ("todella", 201, 572),
        ("kai", 107, 311),
        ("aivan", 117, 343),
        ("kyllä", 158, 465),
        ("ikinä", 127, 374),
    ]

    def test_ratio_value_and_full_ordering(self):
        records = rank_overrepresentation({"tosi": 64}, {"tosi": 143}, min_total=50)
        ratio_ok = abs(records[0].ratio - 0.4476) <= 1e-4

        indel_counts = {lemma: n for lemma, n, _ in self.RANKING_COUNTS}
        total_counts = {lemma: n for lemma, _, n in self.RANKING_COUNTS}
        ranked = rank_overrepresentation(indel_counts, total_counts, min_total=50)
        order_ok = [r.lemma for r in ranked] == [lemma for lemma, _, _ in self.RANKING_COUNTS]
        report(
            "overrepresentation ratio arithmetic and ten-row ordering",
            ratio_ok and order_ok,
            f"tosi ratio={records[0].ratio:.6f}",
        )


class TestLabelGrouping:
    def test_seven_label_fixture(self):
        labels = [
            ("4", ""),
            ("4", "s"),
            ("4", "i"),
            ("4", "<"),
            ("3", ""),
            ("2", ""),
            ("rewrite", ""),
        ]
        groups = Counter(group_label(PairLabel.parse(base, flags)) for base, flags in labels)
        ok = (
            groups[LabelGroup.UNIVERSAL] == 3
            and groups[LabelGroup.CONTEXT_DEPENDENT] == 3
            and groups[LabelGroup.RELATED_NOT_PARAPHRASE] == 1
        )
        report(
            "label grouping over the seven-label fixture",
            ok,
            f"universal={groups[LabelGroup.UNIVERSAL]}, "
            f"context={groups[LabelGroup.CONTEXT_DEPENDENT]}, "
            f"related={groups[LabelGroup.RELATED_NOT_PARAPHRASE]}",
        )


class TestPivotOracle:
    def test_thousand_line_corpus_with_planted_pairs(self):
        generator = random.Random(404)
        aligned, pairs = random_parallel_corpus(generator, lines=1000, planted=50)
        index = build_index(aligned)
        got = sorted(match_pairs(pairs, index).matched_ids)
        expected = sorted(pivot_match_oracle(pairs, aligned, normalize))
        planted_found = sum(1 for pid in got if pid.startswith("planted"))
        report(
            "pivot matching vs nested-loop oracle on 1,000 aligned lines",
            got == expected and planted_found == 50,
            f"matched={len(got)}, planted found={planted_found}",
        )

    def test_normalization_idempotent_on_ten_thousand_strings(self):
        generator = random.Random(505)
        failures = 0
        for _ in range(10_000):
            length = generator.randint(0, 20)
            chars = []
            while len(chars) < length:
                code_point = generator.randrange(0, 0x110000)
                if 0xD800 <= code_point <= 0xDFFF:
                    continue
                chars.append(chr(code_point))
            text = "".join(chars)
            once = normalize(text)
            if normalize(once) != once:
                failures += 1
        report(
            "normalization idempotence on 10,000 random Unicode strings",
            failures == 0,
            f"failures={failures}",
        )


class TestManualCategoryArithmetic:
    PAPER_COUNTS = (61, 33, 22, 21, 16, 14, 9, 3)
    EXPECTED_PERCENTS = (34, 18, 12, 12, 9, 8, 5, 2)

    def test_table_ratios_after_rounding(self, tmp_path):
        # realize the marginals over 100 records: each category fills a
        # contiguous run of record slots, wrapping around, so every
        # record stays non-empty (179 assignments over 100 records)
        assignments = [set() for _ in range(100)]
        pointer = 0
        for category, count in zip(CATEGORY_ORDER, self.PAPER_COUNTS):
            for _ in range(count):
                assignments[pointer % 100].add(category)
                pointer += 1

        store = AnnotationStore(tmp_path / "ann.jsonl", [f"p{i}" for i in range(100)])
        for i, categories in enumerate(assignments):
            store.record_annotation(
                AnnotationRecord(
                    pair_id=f"p{i}",
                    categories=frozenset(categories),
                    annotator="ann",
                    timestamp=utc_now(),
                )
            )

        from paravar.annotation import category_frequencies

        rows = category_frequencies(store)
        counts_ok = tuple(r.count for r in rows) == self.PAPER_COUNTS
        percents = tuple(round(r.ratio * 100) for r in rows)
        report(
            "manual category ratio arithmetic over the frozen count table",
            counts_ok and percents == self.EXPECTED_PERCENTS,
            f"percents={percents}",
        )


class TestNonelementaryMetric:
    def test_exact_value_and_punctuation_invariance(self):
        exact = nonelementary_proportion("abc!", "abc def.") == 0.5

        generator = random.Random(606)
        punctuation = " .,!?;:-—\t\n'\"()"
        failures = 0
        for _ in range(1000):
            pair_text = "".join(
                generator.choice("abcdefäö123") for _ in range(generator.randint(0, 15))
            )
            source_text = "".join(
                generator.choice("xyzåx456") for _ in range(generator.randint(1, 15))
            )
            baseline = nonelementary_proportion([pair_text], [source_text])
            noisy_pair = "".join(
                ch + generator.choice(punctuation) for ch in pair_text
            ) + generator.choice(punctuation)
            noisy_source = generator.choice(punctuation).join(source_text)
            if nonelementary_proportion([noisy_pair], [noisy_source]) != baseline:
                failures += 1
        report(
            "non-elementary proportion: exact value and punctuation invariance",
            exact and failures == 0,
            f"failures={failures}",
        )


class TestDeterminism:
    def test_classify_and_stats_byte_identical_across_runs(self, tmp_path):
        paths = write_fixture_corpus(tmp_path)
        identical = True
        compared = 0
        for command, extra in (("classify", []), ("stats", ["--min-total", "1"])):
            out1 = tmp_path / f"{command}_run1"
            out2 = tmp_path / f"{command}_run2"
            for out in (out1, out2):
                code = main(
                    [
                        command,
                        "--manifest", str(paths["manifest"]),
                        "--conllu", str(paths["conllu"]),
                        "--embeddings", str(paths["embeddings"]),
                        "--wordnet", str(paths["wordnet"]),
                        "--output-dir", str(out),
                        *extra,
                    ]
                )
                assert code == EXIT_OK
            names1 = sorted(p.name for p in out1.iterdir())
            names2 = sorted(p.name for p in out2.iterdir())
            if names1 != names2:
                identical = False
                continue
            for name in names1:
                compared += 1
                if not filecmp.cmp(out1 / name, out2 / name, shallow=False):
                    identical = False
        report(
            "byte-identical classify and stats reports across repeated runs",
            identical and compared >= 6,
            f"files compared={compared}",
        )


RESOURCE_DIR = os.environ.get("PARAVAR_RESOURCE_DIR")


@pytest.mark.skipif(
    not RESOURCE_DIR,
    reason="integration target: set PARAVAR_RESOURCE_DIR to the real corpus resources",
)
class TestCorpusScaleIntegration:
    """Corpus-scale figures; tolerances allow resource-version drift."""

    def test_corpus_scale_figures(self):
        from paravar.cli import RunConfig, _load_lexicon, _load_pairs
        from paravar.pivot import build_index_from_files
        from paravar.stats import accounting_rates, indel_histogram

        root = Path(RESOURCE_DIR)
        config = RunConfig(
            manifest=str(root / "pairs.tsv"),
            conllu=str(root / "pairs.conllu"),
            embeddings=str(root / "lemma_embeddings.bin"),
            wordnet=str(root / "wordnet_pairs.tsv"),
            parallel_source=str(root / "opensubtitles.en"),
            parallel_target=str(root / "opensubtitles.fi"),
        )
        pairs = _load_pairs(config)
        lexicon = _load_lexicon(config, pairs)

        histogram = indel_histogram(pairs, LabelGroup.UNIVERSAL)
        zero_ok = histogram.get(0, 0) == 108

        full, partial, none = accounting_rates(pairs, lexicon, LabelGroup.UNIVERSAL)
        nonzero = full + partial + none
        full_rate = full / nonzero
        synonym_ok = abs(full_rate - 0.06) <= 0.02

        index = build_index_from_files(config.parallel_source, config.parallel_target)
        result = match_pairs(pairs, index)
        pivot_ok = abs(result.match_rate - 0.06) <= 0.02
        length_ok = abs(result.mean_length_matched - 3.8) <= 0.5

        report(
            "corpus-scale integration figures",
            zero_ok and synonym_ok and pivot_ok and length_ok,
            f"zero-indel={histogram.get(0, 0)}, full rate={full_rate:.3f}, "
            f"match rate={result.match_rate:.3f}, matched length={result.mean_length_matched:.2f}",
        )


def free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def wait_ready(client, url: str, timeout: float = 15.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        try:
            if client.get(url).status_code == 200:
                return
        except Exception:
            time.sleep(0.1)
    raise TimeoutError(f"server at {url} never became ready")


class TestAnnotationRoundTripSecondary:
    def test_scripted_session_survives_restart(self, tmp_path):
        import httpx

        paths = write_fixture_corpus(tmp_path)
        sample_file = tmp_path / "sample.json"
        code = main(
            [
                "sample",
                "--manifest", str(paths["manifest"]),
                "--conllu", str(paths["conllu"]),
                "--n", "5",
                "--seed", "7",
                "--sample-file", str(sample_file),
            ]
        )
        assert code == EXIT_OK

        port = free_port()
        journal = tmp_path / "annotations.jsonl"
        argv = [
            sys.executable, "-m", "paravar.cli", "serve",
            "--manifest", str(paths["manifest"]),
            "--conllu", str(paths["conllu"]),
            "--sample-file", str(sample_file),
            "--annotations", str(journal),
            "--port", str(port),
        ]
        base = f"http://127.0.0.1:{port}"
        categories_sent = {}

        def run_server():
            return subprocess.Popen(argv, stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)

        server = run_server()
        try:
            with httpx.Client(timeout=5.0) as client:
                wait_ready(client, f"{base}/api/frequencies")
                for i in range(5):
                    data = client.get(f"{base}/api/next").json()
                    assert data["done"] is False
                    pair_id = data["pair"]["pair_id"]
                    cats = ["word_to_word"] if i % 2 == 0 else ["word_to_word", "emphasizer"]
                    categories_sent[pair_id] = cats
                    posted = client.post(
                        f"{base}/api/annotations",
                        json={"pair_id": pair_id, "categories": cats},
                    )
                    assert posted.status_code == 200
                assert client.get(f"{base}/api/next").json()["done"] is True
        finally:
            server.send_signal(signal.SIGTERM)
            server.wait(timeout=10)

        server = run_server()
        try:
            with httpx.Client(timeout=5.0) as client:
                wait_ready(client, f"{base}/api/frequencies")
                freq = client.get(f"{base}/api/frequencies").json()
                rows = {row["category"]: row["count"] for row in freq["rows"]}
                survived = freq["total_records"] == 5
                counts_ok = rows["word_to_word"] == 5 and rows["emphasizer"] == 2
                still_done = client.get(f"{base}/api/next").json()["done"] is True
        finally:
            server.send_signal(signal.SIGTERM)
            server.wait(timeout=10)

        report(
            "annotation round-trip through service restart",
            survived and counts_ok and still_done,
            f"records={freq['total_records']}, w2w={rows['word_to_word']}",
        )
