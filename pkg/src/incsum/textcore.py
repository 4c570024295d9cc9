"""Sentence segmentation, tokenization, and tf-isf vector arithmetic.

Every other module consumes the primitives defined here: sentences carry a
sparse term vector weighted by term frequency times inverse sentential
frequency, and similarity between sentences is the cosine of those vectors.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

# Splits are suppressed after these tokens (compared lowercase, trailing
# period included). The list is fixed so corpora re-tokenize identically
# across runs.
DEFAULT_ABBREVIATIONS = frozenset({
    "dr.", "mr.", "mrs.", "ms.", "prof.", "sr.", "jr.", "st.",
    "vs.", "etc.", "e.g.", "i.e.", "cf.", "fig.", "no.", "inc.", "co.",
    "u.s.", "u.k.", "u.n.",
})

_TERMINATORS = ".!?"
_TOKEN = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class TextConfig:
    """Versioned text-processing rules shared by documents and queries."""

    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS
    remove_stop_words: bool = False
    stop_words: frozenset[str] = frozenset()


DEFAULT_CONFIG = TextConfig()


@dataclass
class Sentence:
    """One segmented sentence. Treat as immutable once its document is built."""

    id: int
    raw_text: str
    tokens: list[str]
    vector: dict[str, float] = field(default_factory=dict)


@dataclass
class Document:
    """An ordered list of sentences plus the per-term sentence counts."""

    doc_id: str
    sentences: list[Sentence]
    term_stats: dict[str, int] = field(default_factory=dict)
    sentence_count: int = 0

    @classmethod
    def from_text(cls, doc_id: str, text: str, config: TextConfig | None = None) -> "Document":
        return cls.from_sentences(doc_id, segment(text, config), config)

    @classmethod
    def from_sentences(
        cls, doc_id: str, raw_sentences: Iterable[str], config: TextConfig | None = None
    ) -> "Document":
        """Build a document from pre-segmented sentence strings.

        Sentences that tokenize to nothing are dropped; ids are assigned
        contiguously in order.
        """
        sentences: list[Sentence] = []
        for raw in raw_sentences:
            tokens = tokenize(raw, config)
            if not tokens:
                continue
            sentences.append(Sentence(id=len(sentences), raw_text=raw, tokens=tokens))
        return build_vectors(cls(doc_id=doc_id, sentences=sentences))


@dataclass(frozen=True)
class Query:
    """Normalized query terms; t is the number of distinct terms."""

    terms: tuple[str, ...]
    t: int

    @classmethod
    def from_text(cls, text: str, config: TextConfig | None = None) -> "Query":
        seen: list[str] = []
        for term in tokenize(text, config):
            if term not in seen:
                seen.append(term)
        if not seen:
            raise ValueError("query contains no usable terms")
        return cls(terms=tuple(seen), t=len(seen))


def segment(text: str, config: TextConfig | None = None) -> list[str]:
    """Split text into raw sentence strings.

    A sentence ends at '.', '!' or '?' followed by whitespace or end of
    input, except when the preceding word is a guarded abbreviation.
    Fragments are trimmed and empty ones dropped.
    """
    cfg = config or DEFAULT_CONFIG
    out: list[str] = []
    start = 0
    for i, ch in enumerate(text):
        if ch not in _TERMINATORS:
            continue
        if i + 1 < len(text) and not text[i + 1].isspace():
            continue
        fragment = text[start : i + 1]
        if ch == "." and _last_word(fragment).lower() in cfg.abbreviations:
            continue
        fragment = fragment.strip()
        if fragment:
            out.append(fragment)
        start = i + 1
    tail = text[start:].strip()
    if tail:
        out.append(tail)
    return out


def _last_word(fragment: str) -> str:
    parts = fragment.split()
    return parts[-1] if parts else ""


def tokenize(text: str, config: TextConfig | None = None) -> list[str]:
    """Lowercase and split on maximal runs of non-alphanumeric characters."""
    cfg = config or DEFAULT_CONFIG
    tokens = _TOKEN.findall(text.lower())
    if cfg.remove_stop_words and cfg.stop_words:
        tokens = [t for t in tokens if t not in cfg.stop_words]
    return tokens


def term_sentence_counts(token_lists: Sequence[Sequence[str]]) -> dict[str, int]:
    """Number of sentences each term appears in."""
    stats: Counter[str] = Counter()
    for tokens in token_lists:
        stats.update(set(tokens))
    return dict(stats)


def tf_isf_vectors(token_lists: Sequence[Sequence[str]]) -> list[dict[str, float]]:
    """tf * log(N / (n_t + 1)) weights for each token list, natural log.

    The weight goes negative when a term occurs in every sentence; it is
    stored as computed, not clamped.
    """
    n = len(token_lists)
    stats = term_sentence_counts(token_lists)
    vectors: list[dict[str, float]] = []
    for tokens in token_lists:
        counts = Counter(tokens)
        vectors.append({t: c * math.log(n / (stats[t] + 1)) for t, c in counts.items()})
    return vectors


def build_vectors(doc: Document) -> Document:
    """Populate term_stats and every sentence vector from the document itself."""
    token_lists = [s.tokens for s in doc.sentences]
    doc.term_stats = term_sentence_counts(token_lists)
    doc.sentence_count = len(doc.sentences)
    for sentence, vector in zip(doc.sentences, tf_isf_vectors(token_lists)):
        sentence.vector = vector
    return doc


def vector_cosine(a: dict[str, float], b: dict[str, float]) -> float:
    """Cosine of two sparse vectors; 0.0 when either norm is zero.

    The dot product is accumulated over the shared terms in sorted order so
    the result is exactly symmetric in its arguments.
    """
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    dot = 0.0
    for term in sorted(small):
        w = big.get(term)
        if w is not None:
            dot += small[term] * w
    na = math.sqrt(sum(w * w for w in a.values()))
    nb = math.sqrt(sum(w * w for w in b.values()))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return dot / (na * nb)


def cosine_sim(a: Sentence, b: Sentence) -> float:
    """Cosine similarity of two sentences' term vectors."""
    return vector_cosine(a.vector, b.vector)
