import math
import random

import pytest

from incsum.textcore import (
    Document,
    Query,
    TextConfig,
    build_vectors,
    cosine_sim,
    segment,
    tokenize,
    vector_cosine,
)
from synth import random_document


class TestSegment:
    def test_two_terminated_sentences(self):
        assert segment("A b. C d.") == ["A b.", "C d."]

    def test_empty_input(self):
        assert segment("") == []

    def test_abbreviation_guard(self):
        assert segment("Dr. Smith spoke. He left.") == ["Dr. Smith spoke.", "He left."]

    def test_exclamation_and_question(self):
        assert segment("Really? Yes! Fine.") == ["Really?", "Yes!", "Fine."]

    def test_terminator_without_space_does_not_split(self):
        assert segment("Version 2.5 shipped today.") == ["Version 2.5 shipped today."]

    def test_unterminated_tail_kept(self):
        assert segment("One done. trailing fragment") == ["One done.", "trailing fragment"]

    def test_more_guarded_abbreviations(self):
        assert segment("See the U.S. report, etc. for details.") == [
            "See the U.S. report, etc. for details."
        ]


class TestTokenize:
    def test_case_fold_and_punctuation(self):
        assert tokenize("Global Warming!") == ["global", "warming"]

    def test_split_on_hyphen(self):
        assert tokenize("IPCC-2006 report") == ["ipcc", "2006", "report"]

    def test_punctuation_only(self):
        assert tokenize("...") == []

    def test_stop_words_off_by_default(self):
        assert tokenize("the ice melts") == ["the", "ice", "melts"]

    def test_stop_word_removal_when_enabled(self):
        cfg = TextConfig(remove_stop_words=True, stop_words=frozenset({"the"}))
        assert tokenize("the ice melts", cfg) == ["ice", "melts"]

    def test_idempotent_on_own_output(self):
        rng = random.Random(11)
        for _ in range(50):
            text = " ".join(rng.choice(["Ice-melt!", "U.S.", "rise,", "2teen", "a_b"]) for _ in range(6))
            tokens = tokenize(text)
            assert tokenize(" ".join(tokens)) == tokens


class TestBuildVectors:
    def test_tf_isf_weight(self):
        # "ice" twice in the first sentence, nowhere else: 2 * ln(3/2)
        doc = Document.from_sentences("d", ["ice ice floats", "water flows", "wind blows"])
        assert doc.sentences[0].vector["ice"] == pytest.approx(2 * math.log(3 / 2), abs=1e-12)
        assert doc.sentences[0].vector["ice"] == pytest.approx(0.8109, abs=1e-4)

    def test_negative_weight_for_ubiquitous_term(self):
        doc = Document.from_sentences("d", ["the ice", "the water", "the wind"])
        for s in doc.sentences:
            assert s.vector["the"] == pytest.approx(math.log(3 / 4), abs=1e-12)
        assert doc.sentences[0].vector["the"] == pytest.approx(-0.2877, abs=1e-4)

    def test_absent_term_has_no_entry(self):
        doc = Document.from_sentences("d", ["ice floats", "water flows"])
        assert "water" not in doc.sentences[0].vector

    def test_rebuild_is_identical(self):
        rng = random.Random(3)
        doc = random_document(rng, "d", 12)
        before = [dict(s.vector) for s in doc.sentences]
        build_vectors(doc)
        assert [dict(s.vector) for s in doc.sentences] == before

    def test_term_stats_match_brute_force_recount(self):
        rng = random.Random(5)
        doc = random_document(rng, "d", 20)
        recount = {}
        for s in doc.sentences:
            for term in set(s.tokens):
                recount[term] = recount.get(term, 0) + 1
        assert doc.term_stats == recount
        assert all(v <= doc.sentence_count for v in doc.term_stats.values())

    def test_empty_token_sentences_dropped_and_ids_contiguous(self):
        doc = Document.from_sentences("d", ["ice melts", "...", "sea rises"])
        assert [s.id for s in doc.sentences] == [0, 1]
        assert doc.sentence_count == 2


class TestCosine:
    def test_self_similarity_is_one(self):
        doc = Document.from_sentences(
            "d", ["ice melts fast", "sea level rises", "storm hits coast"]
        )
        for s in doc.sentences:
            assert cosine_sim(s, s) == pytest.approx(1.0, abs=1e-9)

    def test_disjoint_vocabulary_is_zero(self):
        doc = Document.from_sentences("d", ["ice melts", "storm hits"])
        assert cosine_sim(doc.sentences[0], doc.sentences[1]) == 0.0

    def test_hand_dot_product(self):
        assert vector_cosine({"x": 1.0, "y": 1.0}, {"x": 1.0}) == pytest.approx(
            1 / math.sqrt(2), abs=1e-12
        )

    def test_zero_norm_convention(self):
        assert vector_cosine({}, {"x": 1.0}) == 0.0
        assert vector_cosine({"x": 0.0}, {"x": 1.0}) == 0.0

    def test_symmetry_is_exact(self):
        rng = random.Random(9)
        doc = random_document(rng, "d", 15)
        for a in doc.sentences:
            for b in doc.sentences:
                assert cosine_sim(a, b) == cosine_sim(b, a)


class TestQuery:
    def test_normalization_and_dedup(self):
        q = Query.from_text("Ice, melt ICE melt sea")
        assert q.terms == ("ice", "melt", "sea")
        assert q.t == 3

    def test_empty_query_rejected(self):
        with pytest.raises(ValueError):
            Query.from_text("  ... ")
