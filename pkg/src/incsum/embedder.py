"""Weave the current summary's sentences into a newly arrived document.

The combined document preserves the internal order of both inputs while
placing each woven-in sentence next to the host sentence it most resembles,
so the result still reads coherently before it is rescored. The smaller
input is always the one woven in: when the summary has at least as many
sentences as the document, the roles swap and the document's sentences are
woven into the summary instead.

Insertion runs in a fixed order over the woven-in sequence s_1..s_x: first
s_x anywhere in the host, then s_1 somewhere before s_x, then s_2..s_{x-1}
each between the previously placed sentence and s_x. A sentence whose best
similarity over its candidate anchors is exactly zero falls back to sitting
directly after its placed predecessor, or directly before its successor
(placing the successor first when needed); if no anchor exists at all, the
remaining sentences are appended at the end in order.

Similarities used during insertion come from one set of tf-isf vectors
computed over the union of both inputs' sentences, frozen at the start of
the call. The returned document's vectors and term statistics are then
recomputed over the embedded result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .textcore import Document, Sentence, build_vectors, tf_isf_vectors, vector_cosine


class Origin(Enum):
    FROM_SUMMARY = "summary"
    FROM_DOCUMENT = "document"


class ZeroSimilarity(Exception):
    """A sentence has similarity exactly 0.0 with every candidate anchor."""


@dataclass(frozen=True)
class InsertionRecord:
    """One insertion step, for trace logs and tests."""

    origin: Origin
    source_index: int
    position: int  # position in the host at insertion time
    anchor: int | None  # host position of the most similar sentence, if any
    side: str  # before | after | after-predecessor | before-successor | append
    exception: bool


@dataclass
class EmbeddedDocument:
    """The woven result, tagged with where each sentence came from."""

    document: Document
    origins: list[Origin]
    source_indices: list[int]
    swapped: bool
    trace: list[InsertionRecord] = field(default_factory=list)

    @property
    def sentences(self) -> list[Sentence]:
        return self.document.sentences

    def positions_of(self, origin: Origin) -> dict[int, int]:
        """Map source index -> final position, for sentences of one origin."""
        return {
            src: pos
            for pos, (o, src) in enumerate(zip(self.origins, self.source_indices))
            if o is origin
        }


@dataclass(eq=False)
class _Entry:
    origin: Origin
    source_index: int
    raw_text: str
    tokens: list[str]
    vector: dict[str, float]


def _choose_placement(
    vector: dict[str, float],
    host_vectors: Sequence[dict[str, float]],
    candidates: Sequence[int],
) -> tuple[int, int, str]:
    """Insertion index for a sentence, per the similarity placement rule.

    The candidate position with the highest similarity (lowest index on
    ties) anchors the insertion. The sentence then goes on whichever side
    of the anchor holds the more similar neighbour; a missing neighbour
    compares as -inf, so a lone anchor puts the new sentence after itself.
    """
    best_pos = -1
    best_sim = -math.inf
    for p in candidates:
        sim = vector_cosine(vector, host_vectors[p])
        if sim > best_sim:
            best_sim, best_pos = sim, p
    if best_sim == 0.0:
        raise ZeroSimilarity(f"no candidate anchor has non-zero similarity ({len(candidates)} tried)")
    y = best_pos
    sim_prev = vector_cosine(vector, host_vectors[y - 1]) if y > 0 else -math.inf
    sim_next = (
        vector_cosine(vector, host_vectors[y + 1]) if y + 1 < len(host_vectors) else -math.inf
    )
    if sim_prev > sim_next:
        return y, y, "before"
    return y + 1, y, "after"


def insert_position(
    vector: dict[str, float],
    host_vectors: Sequence[dict[str, float]],
    candidates: Sequence[int],
) -> int:
    """Where to insert a sentence among the host positions in `candidates`.

    Raises ZeroSimilarity when the best candidate similarity is exactly 0,
    and ValueError when `candidates` is empty (callers decide the fallback).
    """
    if not candidates:
        raise ValueError("candidates must be non-empty")
    position, _, _ = _choose_placement(vector, host_vectors, candidates)
    return position


def embed(current_summary: Document, new_document: Document) -> EmbeddedDocument:
    """Embed the summary into the document (or vice versa when it is larger).

    Either input may be empty: an empty summary returns the document
    unchanged, an empty document returns the summary.
    """
    summary = current_summary.sentences
    document = new_document.sentences
    swapped = len(summary) >= len(document)
    if swapped:
        host_source, host_origin = summary, Origin.FROM_SUMMARY
        woven_source, woven_origin = document, Origin.FROM_DOCUMENT
    else:
        host_source, host_origin = document, Origin.FROM_DOCUMENT
        woven_source, woven_origin = summary, Origin.FROM_SUMMARY

    # One isf computation over everything involved, frozen for the whole call.
    vectors = tf_isf_vectors([s.tokens for s in host_source] + [s.tokens for s in woven_source])
    host: list[_Entry] = [
        _Entry(host_origin, s.id, s.raw_text, s.tokens, v)
        for s, v in zip(host_source, vectors[: len(host_source)])
    ]
    woven_vectors = vectors[len(host_source) :]

    x = len(woven_source)
    placed: list[_Entry | None] = [None] * x
    records: list[InsertionRecord] = []

    def pos_of(k: int) -> int:
        entry = placed[k]
        for idx, e in enumerate(host):
            if e is entry:
                return idx
        raise RuntimeError(f"sentence {k} not found in host")

    def put(k: int, position: int, anchor: int | None, side: str, exception: bool) -> None:
        s = woven_source[k]
        entry = _Entry(woven_origin, s.id, s.raw_text, s.tokens, woven_vectors[k])
        host.insert(position, entry)
        placed[k] = entry
        records.append(InsertionRecord(woven_origin, s.id, position, anchor, side, exception))

    def candidate_range(k: int) -> list[int]:
        # Anchors eligible for sentence k: everything for the last sentence,
        # otherwise strictly between the nearest placed predecessor (or the
        # host start) and the placed last sentence.
        if k == x - 1:
            return list(range(len(host)))
        right = pos_of(x - 1)
        left = -1
        for j in range(k - 1, -1, -1):
            if placed[j] is not None:
                left = pos_of(j)
                break
        return list(range(left + 1, right))

    def try_insert(k: int) -> bool:
        candidates = candidate_range(k)
        if not candidates:
            return False  # nowhere to anchor: same fallback as zero similarity
        try:
            position, anchor, side = _choose_placement(
                woven_vectors[k], [e.vector for e in host], candidates
            )
        except ZeroSimilarity:
            return False
        put(k, position, anchor, side, False)
        return True

    def place_fallback(k: int) -> None:
        if k > 0 and placed[k - 1] is not None:
            put(k, pos_of(k - 1) + 1, None, "after-predecessor", True)
            return
        # No placed predecessor: anchor on the successor, placing successors
        # first where needed. Sentences that fail along the way queue up and
        # are inserted directly before the first anchored one.
        pending = [k]
        j = k + 1
        while j < x and placed[j] is None and not try_insert(j):
            pending.append(j)
            j += 1
        if j < x:
            for m in reversed(pending):
                put(m, pos_of(m + 1), None, "before-successor", True)
        else:
            for m in range(x):
                if placed[m] is None:
                    put(m, len(host), None, "append", True)

    if x > 0:
        if not try_insert(x - 1):
            place_fallback(x - 1)
        if x >= 2 and placed[0] is None:
            if not try_insert(0):
                place_fallback(0)
        for k in range(1, x - 1):
            if placed[k] is None and not try_insert(k):
                place_fallback(k)

    merged = Document(
        doc_id=f"{current_summary.doc_id}+{new_document.doc_id}",
        sentences=[
            Sentence(id=i, raw_text=e.raw_text, tokens=list(e.tokens))
            for i, e in enumerate(host)
        ],
    )
    build_vectors(merged)
    return EmbeddedDocument(
        document=merged,
        origins=[e.origin for e in host],
        source_indices=[e.source_index for e in host],
        swapped=swapped,
        trace=records,
    )


def format_trace(embedded: EmbeddedDocument) -> str:
    """Human-readable insertion trace, one line per woven-in sentence."""
    lines = []
    for r in embedded.trace:
        anchor = "-" if r.anchor is None else str(r.anchor)
        flag = " [fallback]" if r.exception else ""
        lines.append(
            f"{r.origin.value}[{r.source_index}] -> position {r.position} "
            f"(anchor {anchor}, {r.side}){flag}"
        )
    return "\n".join(lines) + ("\n" if lines else "")
