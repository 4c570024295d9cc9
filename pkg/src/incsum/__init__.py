"""Incremental, query-focused extractive multi-document summarization."""

from .bootstrap import BootstrapConfig, bootstrap_summary, centroid_vector
from .embedder import (
    EmbeddedDocument,
    InsertionRecord,
    Origin,
    ZeroSimilarity,
    embed,
    insert_position,
)
from .graph import SentenceGraph, build_graph, dump_edges
from .pipeline import (
    ConfigError,
    RunConfig,
    RunReport,
    UpdateRecord,
    run_cluster,
    update_summary,
)
from .rouge import RougeReport, evaluate, rouge_n, rouge_su4, rouge_w
from .scorer import (
    ScoreTable,
    ScoringConfig,
    dump_scores,
    indicator,
    node_score,
    score_document,
)
from .selector import (
    Pick,
    SelectionConfig,
    SelectionState,
    Summary,
    select_summary,
    temp_score,
    truncate_words,
)
from .textcore import (
    Document,
    Query,
    Sentence,
    TextConfig,
    build_vectors,
    cosine_sim,
    segment,
    tokenize,
    vector_cosine,
)

__version__ = "0.1.0"

__all__ = [
    "BootstrapConfig",
    "ConfigError",
    "Document",
    "EmbeddedDocument",
    "InsertionRecord",
    "Origin",
    "Pick",
    "Query",
    "RougeReport",
    "RunConfig",
    "RunReport",
    "ScoreTable",
    "ScoringConfig",
    "SelectionConfig",
    "SelectionState",
    "Sentence",
    "SentenceGraph",
    "Summary",
    "TextConfig",
    "UpdateRecord",
    "ZeroSimilarity",
    "bootstrap_summary",
    "build_graph",
    "build_vectors",
    "centroid_vector",
    "cosine_sim",
    "dump_edges",
    "dump_scores",
    "embed",
    "evaluate",
    "indicator",
    "insert_position",
    "node_score",
    "rouge_n",
    "rouge_su4",
    "rouge_w",
    "run_cluster",
    "score_document",
    "segment",
    "select_summary",
    "temp_score",
    "tokenize",
    "truncate_words",
    "update_summary",
    "vector_cosine",
]
