"""Seed summary over the initial documents of a cluster.

Sentences are scored by a weighted combination of three features: cosine to
the cluster centroid, a position prior of 1 / (1 + position), and cosine to
a query vector. A greedy pass then takes sentences in descending score,
skipping any that are too similar to one already taken, and the result is
ordered by document chronology and sentence position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .selector import Pick, Summary
from .textcore import Document, Query, term_sentence_counts, vector_cosine


@dataclass(frozen=True)
class BootstrapConfig:
    w_centroid: float = 1.0
    w_position: float = 1.0
    w_query: float = 10.0
    mmr_sim_threshold: float = 0.6
    summary_sentences: int = 12

    def __post_init__(self) -> None:
        if min(self.w_centroid, self.w_position, self.w_query) < 0:
            raise ValueError("feature weights must be non-negative")
        if not 0.0 <= self.mmr_sim_threshold <= 1.0:
            raise ValueError("mmr_sim_threshold must be in [0, 1]")
        if self.summary_sentences < 1:
            raise ValueError("summary_sentences must be at least 1")


def centroid_vector(docs: Sequence[Document]) -> dict[str, float]:
    """Arithmetic mean of every sentence vector in the cluster."""
    acc: dict[str, float] = {}
    total = 0
    for doc in docs:
        for sentence in doc.sentences:
            for term, weight in sentence.vector.items():
                acc[term] = acc.get(term, 0.0) + weight
            total += 1
    if total == 0:
        raise ValueError("cluster has no sentences")
    return {term: value / total for term, value in acc.items()}


def _query_vector(docs: Sequence[Document], query: Query) -> dict[str, float]:
    # Query terms weighted by isf over the concatenated cluster.
    token_lists = [s.tokens for doc in docs for s in doc.sentences]
    n = len(token_lists)
    stats = term_sentence_counts(token_lists)
    return {term: math.log(n / (stats.get(term, 0) + 1)) for term in query.terms}


def bootstrap_summary(
    docs: Sequence[Document],
    query: Query,
    cfg: BootstrapConfig | None = None,
) -> Summary:
    """Build the initial summary from the first documents of a cluster."""
    cfg = cfg or BootstrapConfig()
    centroid = centroid_vector(docs)
    query_vec = _query_vector(docs, query)

    ranked: list[tuple[float, int, int, int]] = []  # (score, doc order, position, global index)
    flat = []
    g = 0
    for d_idx, doc in enumerate(docs):
        for sentence in doc.sentences:
            score = (
                cfg.w_centroid * vector_cosine(sentence.vector, centroid)
                + cfg.w_position * (1.0 / (1.0 + sentence.id))
                + cfg.w_query * vector_cosine(sentence.vector, query_vec)
            )
            ranked.append((score, d_idx, sentence.id, g))
            flat.append(sentence)
            g += 1
    ranked.sort(key=lambda r: (-r[0], r[1], r[2]))

    taken: list[tuple[int, int, int]] = []  # (doc order, position, global index)
    picks: list[Pick] = []
    for score, d_idx, position, g_idx in ranked:
        if len(taken) == cfg.summary_sentences:
            break
        candidate = flat[g_idx]
        if any(
            vector_cosine(candidate.vector, flat[other].vector) >= cfg.mmr_sim_threshold
            for _, _, other in taken
        ):
            continue
        taken.append((d_idx, position, g_idx))
        picks.append(Pick(index=g_idx, phase="bootstrap", base_score=score, temp_score=None))

    taken.sort()
    return Summary(sentences=[flat[g_idx] for _, _, g_idx in taken], picks=picks)
