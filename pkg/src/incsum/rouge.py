"""Recall-oriented overlap measures between a candidate and model texts.

All measures aggregate over multiple models the same way: the sum of the
per-model match counts divided by the sum of the per-model totals. Models
too short to produce a counting unit contribute zero to both sums; if no
model produces any unit at all, that is an error.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

TokenList = Sequence[str]

DEFAULT_WEIGHT_EXPONENT = 1.2
SKIP_DISTANCE = 4  # max tokens allowed between the two members of a skip bigram


@dataclass(frozen=True)
class RougeReport:
    rouge1: float
    rouge2: float
    rouge_w: float
    rouge_su4: float

    def as_dict(self) -> dict[str, float]:
        return {
            "rouge_1": self.rouge1,
            "rouge_2": self.rouge2,
            "rouge_w": self.rouge_w,
            "rouge_su4": self.rouge_su4,
        }


def _ngram_counts(tokens: TokenList, n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def rouge_n(candidate: TokenList, models: Sequence[TokenList], n: int) -> float:
    """Clipped n-gram recall of the candidate against the models."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not models:
        raise ValueError("at least one model is required")
    candidate_grams = _ngram_counts(candidate, n)
    matched = 0
    total = 0
    for model in models:
        grams = _ngram_counts(model, n)
        total += sum(grams.values())
        matched += sum(min(count, candidate_grams[gram]) for gram, count in grams.items())
    if total == 0:
        raise ValueError(f"no model contains any {n}-gram")
    return matched / total


def _wlcs(x: TokenList, y: TokenList, exponent: float) -> float:
    """Weighted longest common subsequence score.

    A common subsequence scores the sum of run ** exponent over its maximal
    runs (stretches matched consecutively in both sequences); the result is
    the exact maximum of that score over all common subsequences. best[i][j]
    holds the maximum over the prefixes x[:i], y[:j]; a match cell also
    considers ending with a final run of every feasible length.
    """
    m, n = len(x), len(y)
    powers = [float(k) ** exponent for k in range(min(m, n) + 1)]
    best = [[0.0] * (n + 1) for _ in range(m + 1)]
    run_prev = [0] * (n + 1)
    for i in range(1, m + 1):
        xi = x[i - 1]
        run_cur = [0] * (n + 1)
        best_prev, best_cur = best[i - 1], best[i]
        for j in range(1, n + 1):
            b = best_prev[j]
            left = best_cur[j - 1]
            if left > b:
                b = left
            if xi == y[j - 1]:
                r = run_prev[j - 1] + 1
                run_cur[j] = r
                for k in range(1, r + 1):
                    v = powers[k] + best[i - k][j - k]
                    if v > b:
                        b = v
            best_cur[j] = b
        run_prev = run_cur
    return best[m][n]


def rouge_w(
    candidate: TokenList,
    models: Sequence[TokenList],
    weight_exponent: float = DEFAULT_WEIGHT_EXPONENT,
) -> float:
    """Weighted-LCS recall: consecutive matches outweigh scattered ones."""
    if weight_exponent < 1:
        raise ValueError("weight_exponent must be at least 1")
    if not models:
        raise ValueError("at least one model is required")
    inverse = 1.0 / weight_exponent
    matched = 0.0
    total = 0
    for model in models:
        if not model:
            continue
        matched += _wlcs(candidate, model, weight_exponent) ** inverse
        total += len(model)
    if total == 0:
        raise ValueError("all models are empty")
    return matched / total


def su4_units(tokens: TokenList) -> Counter:
    """Counting units for the skip-bigram measure: unigrams plus in-order
    token pairs with at most SKIP_DISTANCE tokens between them."""
    units = Counter((t,) for t in tokens)
    for i in range(len(tokens)):
        for j in range(i + 1, min(i + SKIP_DISTANCE + 1, len(tokens) - 1) + 1):
            units[(tokens[i], tokens[j])] += 1
    return units


def rouge_su4(candidate: TokenList, models: Sequence[TokenList]) -> float:
    """Clipped recall over unigrams and skip bigrams of distance up to 4."""
    if not models:
        raise ValueError("at least one model is required")
    candidate_units = su4_units(candidate)
    matched = 0
    total = 0
    for model in models:
        units = su4_units(model)
        total += sum(units.values())
        matched += sum(min(count, candidate_units[u]) for u, count in units.items())
    if total == 0:
        raise ValueError("all models are empty")
    return matched / total


def evaluate(
    candidate: TokenList,
    models: Sequence[TokenList],
    weight_exponent: float = DEFAULT_WEIGHT_EXPONENT,
) -> RougeReport:
    """All four measures of the candidate against the models."""
    return RougeReport(
        rouge1=rouge_n(candidate, models, 1),
        rouge2=rouge_n(candidate, models, 2),
        rouge_w=rouge_w(candidate, models, weight_exponent),
        rouge_su4=rouge_su4(candidate, models),
    )
