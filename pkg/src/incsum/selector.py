"""Greedy summary extraction with redundancy-penalized rescoring.

Selection proceeds in three stages: the highest-scored sentence first, then
sentences chosen to cover the remaining query terms as fast as possible,
then a fill stage driven purely by the rescored relevance. Rescoring is
temporary: a candidate's score becomes kappa * lambda * base minus
(1 - lambda) times its maximum similarity to anything already selected, and
the base scores themselves are never modified. The chosen sentences are
returned in document order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .graph import SentenceGraph
from .scorer import ScoreTable
from .textcore import Document, Query, Sentence, TextConfig, cosine_sim


@dataclass(frozen=True)
class SelectionConfig:
    summary_size: int = 12
    lambda_: float = 0.7  # relevance vs redundancy trade-off
    kappa: float = 20.0  # scaling of the relevance term

    def __post_init__(self) -> None:
        if self.summary_size < 1:
            raise ValueError("summary_size must be at least 1")
        if not 0.0 <= self.lambda_ <= 1.0:
            raise ValueError(f"lambda must be in [0, 1], got {self.lambda_}")
        if self.kappa <= 0.0:
            raise ValueError(f"kappa must be positive, got {self.kappa}")


@dataclass
class SelectionState:
    """Mutable bookkeeping while a summary is being assembled."""

    selected: list[int] = field(default_factory=list)
    covered_terms: set[str] = field(default_factory=set)

    @property
    def count(self) -> int:
        return len(self.selected)


@dataclass(frozen=True)
class Pick:
    """Why a sentence was selected: the stage and the scores at that moment."""

    index: int
    phase: str  # initial | completeness | fill | bootstrap
    base_score: float
    temp_score: float | None


@dataclass
class Summary:
    """Selected sentences in document order plus the selection history."""

    sentences: list[Sentence]
    picks: list[Pick]

    def lines(self) -> list[str]:
        # Internal whitespace is normalized so summaries survive a
        # line-oriented write/read round trip byte-identically.
        return [" ".join(s.raw_text.split()) for s in self.sentences]

    def text(self) -> str:
        return " ".join(self.lines())

    def to_document(self, doc_id: str, config: TextConfig | None = None) -> Document:
        return Document.from_sentences(doc_id, self.lines(), config)


def temp_score(
    index: int,
    state: SelectionState,
    scores: ScoreTable,
    doc: Document,
    cfg: SelectionConfig,
) -> float:
    """Rescored relevance of a candidate against the current selection."""
    if not state.selected:
        raise ValueError("temp_score requires at least one selected sentence")
    max_sim = max(
        cosine_sim(doc.sentences[index], doc.sentences[j]) for j in state.selected
    )
    return cfg.kappa * cfg.lambda_ * scores.base[index] - (1.0 - cfg.lambda_) * max_sim


def select_summary(
    doc: Document,
    query: Query,
    scores: ScoreTable,
    graph: SentenceGraph | None = None,
    cfg: SelectionConfig | None = None,
) -> Summary:
    """Extract a summary of cfg.summary_size sentences from the document.

    The graph, when given, seeds the pairwise-similarity cache with its edge
    weights; similarities below the graph threshold are computed on demand.
    """
    cfg = cfg or SelectionConfig()
    n = doc.sentence_count
    if n == 0:
        raise ValueError("cannot select a summary from an empty document")
    if cfg.summary_size > n:
        raise ValueError(
            f"summary_size {cfg.summary_size} exceeds the document's {n} sentences"
        )

    base = scores.base
    token_sets = [set(s.tokens) for s in doc.sentences]
    target = set(query.terms)
    sim_cache: dict[tuple[int, int], float] = dict(graph.edges) if graph is not None else {}

    def sim(i: int, j: int) -> float:
        key = (i, j) if i < j else (j, i)
        value = sim_cache.get(key)
        if value is None:
            value = cosine_sim(doc.sentences[key[0]], doc.sentences[key[1]])
            sim_cache[key] = value
        return value

    def rescored(i: int, selected: list[int]) -> float:
        max_sim = max(sim(i, j) for j in selected)
        return cfg.kappa * cfg.lambda_ * base[i] - (1.0 - cfg.lambda_) * max_sim

    first = max(range(n), key=lambda i: base[i])  # first maximum wins ties
    selected = [first]
    chosen = {first}
    covered = target & token_sets[first]
    picks = [Pick(first, "initial", base[first], None)]

    while covered != target and len(selected) != cfg.summary_size:
        uncovered = target - covered
        best = -1
        best_new = -1
        best_temp = -math.inf
        for i in range(n):
            if i in chosen:
                continue
            new_terms = len(uncovered & token_sets[i])
            t = rescored(i, selected)
            if new_terms > best_new or (new_terms == best_new and t > best_temp):
                best, best_new, best_temp = i, new_terms, t
        selected.append(best)
        chosen.add(best)
        covered |= target & token_sets[best]
        picks.append(Pick(best, "completeness", base[best], best_temp))

    while len(selected) != cfg.summary_size:
        best = -1
        best_temp = -math.inf
        for i in range(n):
            if i in chosen:
                continue
            t = rescored(i, selected)
            if t > best_temp:
                best, best_temp = i, t
        selected.append(best)
        chosen.add(best)
        picks.append(Pick(best, "fill", base[best], best_temp))

    ordered = sorted(selected)
    return Summary(sentences=[doc.sentences[i] for i in ordered], picks=picks)


def truncate_words(summary: Summary, limit: int) -> str:
    """Concatenated summary text cut after the limit-th word."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    text = summary.text()
    words = text.split()
    if len(words) <= limit:
        return text
    return " ".join(words[:limit])


def clamped(cfg: SelectionConfig, sentence_count: int) -> SelectionConfig:
    """The same config with summary_size capped at the available sentences."""
    if cfg.summary_size <= sentence_count:
        return cfg
    return replace(cfg, summary_size=sentence_count)
