"""Query-relevance scores for sentences of an embedded document.

A sentence earns d/t for each query term it contains directly, plus a
neighbour contribution: the similarity-weighted average of the term's
presence over the adjacent sentences that contain it, scaled by (1 - d).
The score of a sentence is the sum of those per-term values. Scoring is a
single pass; nothing iterates to a fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .graph import DEFAULT_THRESHOLD, SentenceGraph
from .textcore import Document, Query, Sentence


@dataclass(frozen=True)
class ScoringConfig:
    """d splits the score between a sentence's own hits and its neighbours'."""

    d: float = 0.85
    adjacency_threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self) -> None:
        if not 0.0 <= self.d <= 1.0:
            raise ValueError(f"bias factor d must be in [0, 1], got {self.d}")


@dataclass
class ScoreTable:
    """Per-sentence base scores and their per-query-term breakdown."""

    base: dict[int, float]
    per_term: dict[tuple[int, str], float]


def indicator(sentence: Sentence, term: str, t: int) -> float:
    """1/t when the exact term occurs in the sentence, else 0."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return 1.0 / t if term in sentence.tokens else 0.0


def _term_score(
    index: int,
    term: str,
    inv_t: float,
    d: float,
    neighbors: Callable[[int], Sequence[tuple[int, float]]],
    token_sets: Sequence[frozenset[str]],
) -> float:
    value = d * (inv_t if term in token_sets[index] else 0.0)
    acc = 0.0
    count = 0
    for j, weight in neighbors(index):
        if term in token_sets[j]:
            acc += weight * inv_t
            count += 1
    if count:
        value += ((1.0 - d) / count) * acc
    return value


def node_score(
    sentence: Sentence,
    query: Query,
    graph: SentenceGraph,
    doc: Document,
    cfg: ScoringConfig | None = None,
) -> float:
    """Relevance of one sentence to the query, summed over query terms.

    The graph must have been built over `doc`, and `sentence` must be one of
    its sentences.
    """
    cfg = cfg or ScoringConfig()
    token_sets = [frozenset(s.tokens) for s in doc.sentences]
    inv_t = 1.0 / query.t
    total = 0.0
    for term in query.terms:
        total += _term_score(sentence.id, term, inv_t, cfg.d, graph.neighbors, token_sets)
    return total


def score_document(
    doc: Document,
    query: Query,
    graph: SentenceGraph,
    cfg: ScoringConfig | None = None,
) -> ScoreTable:
    """Score every sentence of the document against the query."""
    cfg = cfg or ScoringConfig()
    token_sets = [frozenset(s.tokens) for s in doc.sentences]
    inv_t = 1.0 / query.t
    base: dict[int, float] = {}
    per_term: dict[tuple[int, str], float] = {}
    for sentence in doc.sentences:
        total = 0.0
        for term in query.terms:
            value = _term_score(sentence.id, term, inv_t, cfg.d, graph.neighbors, token_sets)
            per_term[(sentence.id, term)] = value
            total += value
        base[sentence.id] = total
    return ScoreTable(base=base, per_term=per_term)


def dump_scores(table: ScoreTable) -> str:
    """Tab-separated "sentence_index base_score" lines, ascending index."""
    lines = [f"{i}\t{table.base[i]!r}" for i in sorted(table.base)]
    return "\n".join(lines) + ("\n" if lines else "")
