import random
from collections import Counter

import pytest

from incsum.embedder import Origin, ZeroSimilarity, embed, insert_position
from incsum.textcore import Document
from synth import random_document, topical_pair


def doc_of(*sentences: str, doc_id: str = "d") -> Document:
    return Document.from_sentences(doc_id, list(sentences))


def origins_in_order(embedded):
    return [(o, i) for o, i in zip(embedded.origins, embedded.source_indices)]


class TestInsertPosition:
    def test_identical_to_first_of_two_goes_after_it(self):
        host = [{"a": 1.0}, {"b": 1.0}]
        # anchor is position 0; no predecessor, so the new sentence lands after it
        assert insert_position({"a": 1.0}, host, [0, 1]) == 1

    def test_single_host_sentence_places_after(self):
        assert insert_position({"a": 1.0}, [{"a": 1.0}], [0]) == 1

    def test_more_similar_predecessor_places_before_anchor(self):
        host = [{"a": 1.0}, {"b": 1.0}, {"c": 1.0}]
        target = {"b": 1.0, "a": 0.5}
        assert insert_position(target, host, [0, 1, 2]) == 1

    def test_more_similar_successor_places_after_anchor(self):
        host = [{"a": 1.0}, {"b": 1.0}, {"c": 1.0}]
        target = {"b": 1.0, "c": 0.5}
        assert insert_position(target, host, [0, 1, 2]) == 2

    def test_tie_on_anchor_goes_to_lowest_index(self):
        host = [{"a": 1.0}, {"a": 1.0}, {"a": 1.0}]
        # all anchors tie; position 0 wins, both neighbours missing/-inf -> after
        assert insert_position({"a": 2.0}, host, [0, 1, 2]) == 1

    def test_candidates_restrict_the_anchor_choice(self):
        host = [{"a": 1.0}, {"b": 1.0}, {"a": 1.0}]
        # position 0 is out of range so the anchor is 2; its predecessor at
        # position 1 beats the missing successor, placing the sentence at 2
        assert insert_position({"a": 1.0}, host, [1, 2]) == 2

    def test_zero_similarity_signalled(self):
        with pytest.raises(ZeroSimilarity):
            insert_position({"zz": 1.0}, [{"a": 1.0}], [0])

    def test_empty_candidates_rejected(self):
        with pytest.raises(ValueError):
            insert_position({"a": 1.0}, [{"a": 1.0}], [])


class TestEmbedIdentities:
    def test_empty_summary_returns_document_unchanged(self):
        doc = doc_of("Ice melts.", "Sea rises.")
        emb = embed(Document.from_sentences("s", []), doc)
        assert [s.raw_text for s in emb.sentences] == ["Ice melts.", "Sea rises."]
        assert emb.origins == [Origin.FROM_DOCUMENT] * 2
        assert not emb.swapped

    def test_empty_document_returns_summary(self):
        summary = doc_of("Ice melts.", "Sea rises.", doc_id="s")
        emb = embed(summary, Document.from_sentences("d", []))
        assert [s.raw_text for s in emb.sentences] == ["Ice melts.", "Sea rises."]
        assert emb.origins == [Origin.FROM_SUMMARY] * 2
        assert emb.swapped

    def test_both_empty(self):
        emb = embed(Document.from_sentences("s", []), Document.from_sentences("d", []))
        assert emb.sentences == []


class TestSwapRule:
    def test_larger_summary_becomes_the_host(self):
        summary = Document.from_sentences(
            "s", [f"alpha{i} beta{i} gamma{i}." for i in range(5)]
        )
        doc = doc_of("alpha0 north.", "alpha2 south.", "alpha4 west.")
        emb = embed(summary, doc)
        assert emb.swapped
        # the woven-in sequence is the document
        assert all(r.origin is Origin.FROM_DOCUMENT for r in emb.trace)
        summary_order = [i for o, i in origins_in_order(emb) if o is Origin.FROM_SUMMARY]
        assert summary_order == sorted(summary_order)

    def test_equal_sizes_swap(self):
        summary = doc_of("alpha one.", "beta two.", doc_id="s")
        doc = doc_of("alpha three.", "beta four.")
        emb = embed(summary, doc)
        assert emb.swapped
        assert all(r.origin is Origin.FROM_DOCUMENT for r in emb.trace)

    def test_single_sentence_summary_inserted_exactly_once(self):
        summary = doc_of("alpha beta north.", doc_id="s")
        doc = doc_of("alpha beta one.", "gamma delta two.", "epsilon zeta three.")
        emb = embed(summary, doc)
        assert len(emb.trace) == 1
        assert sum(1 for o in emb.origins if o is Origin.FROM_SUMMARY) == 1


class TestExceptionHandling:
    def test_fully_unrelated_summary_is_appended(self):
        summary = doc_of("Qq zz.", "Yy ww.", doc_id="s")
        doc = doc_of("Alpha beta one.", "Gamma delta two.", "Epsilon zeta three.")
        emb = embed(summary, doc)
        assert [s.raw_text for s in emb.sentences] == [
            "Alpha beta one.",
            "Gamma delta two.",
            "Epsilon zeta three.",
            "Qq zz.",
            "Yy ww.",
        ]
        assert all(r.exception for r in emb.trace)

    def test_zero_similar_sentence_lands_right_after_predecessor(self):
        doc = doc_of(
            "alpha beta one.",
            "gamma delta two.",
            "epsilon zeta three.",
            "eta theta four.",
            "iota kappa five.",
        )
        summary = doc_of(
            "alpha beta north.",
            "gamma delta south.",
            "mystery unrelated token.",
            "iota kappa west.",
            doc_id="s",
        )
        emb = embed(summary, doc)
        pos = emb.positions_of(Origin.FROM_SUMMARY)
        assert pos[2] == pos[1] + 1
        fallback = [r for r in emb.trace if r.exception]
        assert [r.source_index for r in fallback] == [2]
        assert fallback[0].side == "after-predecessor"

    def test_first_sentence_zero_similar_goes_right_before_successor(self):
        doc = doc_of("alpha beta one.", "gamma delta two.", "epsilon zeta three.")
        summary = doc_of("mystery unrelated token.", "gamma delta south.", doc_id="s")
        emb = embed(summary, doc)
        pos = emb.positions_of(Origin.FROM_SUMMARY)
        assert pos[0] + 1 == pos[1]
        fallback = [r for r in emb.trace if r.exception]
        assert [r.source_index for r in fallback] == [0]
        assert fallback[0].side == "before-successor"

    def test_zero_similar_prefix_chain_lands_before_first_placeable(self):
        doc = doc_of(
            "alpha beta one.",
            "gamma delta two.",
            "epsilon zeta three.",
            "eta theta four.",
            "iota kappa five.",
        )
        summary = doc_of(
            "mystery unknown.",
            "strange rare.",
            "epsilon zeta south.",
            "iota kappa west.",
            doc_id="s",
        )
        emb = embed(summary, doc)
        pos = emb.positions_of(Origin.FROM_SUMMARY)
        # the two unplaceable openers queue up directly before their successor
        assert pos[0] + 1 == pos[1] and pos[1] + 1 == pos[2]
        assert pos[2] < pos[3]
        sides = {r.source_index: r.side for r in emb.trace if r.exception}
        assert sides == {0: "before-successor", 1: "before-successor"}

    def test_chain_exhausting_to_the_placed_last_sentence(self):
        doc = doc_of(
            "alpha beta one.",
            "gamma delta two.",
            "epsilon zeta three.",
            "eta theta four.",
            "iota kappa five.",
        )
        summary = doc_of(
            "mystery unknown.",
            "strange rare.",
            "qq ww.",
            "iota kappa west.",
            doc_id="s",
        )
        emb = embed(summary, doc)
        pos = emb.positions_of(Origin.FROM_SUMMARY)
        # everything unplaceable stacks up immediately before the last sentence
        assert [pos[1] - pos[0], pos[2] - pos[1], pos[3] - pos[2]] == [1, 1, 1]


class TestInvariants:
    def test_conservation_and_relative_order_randomized(self):
        rng = random.Random(101)
        for _ in range(100):
            ns, nd = rng.randint(0, 12), rng.randint(0, 12)
            summary = random_document(rng, "s", ns)
            doc = random_document(rng, "d", nd)
            emb = embed(summary, doc)

            got = Counter(s.raw_text for s in emb.sentences)
            want = Counter(s.raw_text for s in summary.sentences)
            want.update(s.raw_text for s in doc.sentences)
            assert got == want

            for origin, source in (
                (Origin.FROM_SUMMARY, summary),
                (Origin.FROM_DOCUMENT, doc),
            ):
                order = [i for o, i in origins_in_order(emb) if o is origin]
                assert order == list(range(len(source.sentences)))

    def test_conservation_with_duplicate_sentences(self):
        summary = doc_of("Ice melts now.", "Sea rises fast.", doc_id="s")
        doc = doc_of("Ice melts now.", "Storm hits coast.", "Sea rises fast.")
        emb = embed(summary, doc)
        assert Counter(s.raw_text for s in emb.sentences) == Counter(
            {"Ice melts now.": 2, "Sea rises fast.": 2, "Storm hits coast.": 1}
        )

    def test_boundary_discipline_on_clean_paths(self):
        rng = random.Random(55)
        checked = 0
        for _ in range(80):
            summary, doc = topical_pair(rng, rng.randint(3, 6))
            emb = embed(summary, doc)
            if any(r.exception for r in emb.trace):
                continue
            pos = emb.positions_of(Origin.FROM_SUMMARY)
            x = len(summary.sentences)
            for i in range(1, x - 1):
                assert pos[i - 1] < pos[i] < pos[x - 1]
            checked += 1
        assert checked >= 60

    def test_determinism(self):
        rng = random.Random(77)
        summary = random_document(rng, "s", 6)
        doc = random_document(rng, "d", 10)
        a = embed(summary, doc)
        b = embed(summary, doc)
        assert [s.raw_text for s in a.sentences] == [s.raw_text for s in b.sentences]
        assert a.origins == b.origins and a.source_indices == b.source_indices

    def test_result_vectors_rebuilt_over_embedded_document(self):
        rng = random.Random(13)
        summary = random_document(rng, "s", 4)
        doc = random_document(rng, "d", 7)
        emb = embed(summary, doc)
        merged = emb.document
        assert [s.id for s in merged.sentences] == list(range(11))
        recount = {}
        for s in merged.sentences:
            for term in set(s.tokens):
                recount[term] = recount.get(term, 0) + 1
        assert merged.term_stats == recount
        rebuilt = Document.from_sentences("check", [s.raw_text for s in merged.sentences])
        for ours, fresh in zip(merged.sentences, rebuilt.sentences):
            assert ours.vector == fresh.vector
