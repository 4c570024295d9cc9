"""End-to-end protocol: seed a summary, then fold in each new document.

A run reads the corpus in lexicographic filename order, builds the seed
summary over the first `bootstrap_docs` files, and then updates it once per
remaining file: the current summary is embedded into the new document, the
result is rescored against the query, and a fresh summary is extracted.
Only the previous summary and the one new document feed each update; the
earlier source documents are never consulted again.

Every update persists the full summary (one sentence per line), a
word-limited truncation, and a key-value metadata sidecar; when model
summaries are supplied the truncation is also scored against them.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from .bootstrap import BootstrapConfig, bootstrap_summary
from .embedder import EmbeddedDocument, embed
from .graph import build_graph
from .rouge import DEFAULT_WEIGHT_EXPONENT, RougeReport, evaluate
from .scorer import ScoringConfig, score_document
from .selector import SelectionConfig, Summary, clamped, select_summary, truncate_words
from .textcore import Document, Query, TextConfig, tokenize


class ConfigError(ValueError):
    """Bad run configuration or config file contents."""


@dataclass
class RunConfig:
    corpus_dir: Path
    query_file: Path
    out_dir: Path
    model_dir: Path | None = None
    bootstrap_docs: int = 15
    total_docs: int = 25
    word_limit: int = 250
    weight_exponent: float = DEFAULT_WEIGHT_EXPONENT
    scoring: ScoringConfig = field(default_factory=ScoringConfig)
    selection: SelectionConfig = field(default_factory=SelectionConfig)
    bootstrap: BootstrapConfig = field(default_factory=BootstrapConfig)
    text: TextConfig = field(default_factory=TextConfig)

    def validate(self) -> None:
        if self.bootstrap_docs < 1:
            raise ConfigError("bootstrap_docs must be at least 1")
        if self.total_docs <= self.bootstrap_docs:
            raise ConfigError("total_docs must exceed bootstrap_docs")
        if self.word_limit < 0:
            raise ConfigError("word_limit must be non-negative")


@dataclass
class UpdateRecord:
    update_index: int
    doc_id: str
    summary_sentences: int
    document_sentences: int
    embedded_sentences: int
    duration_s: float
    output_path: str
    rouge: RougeReport | None = None


@dataclass
class RunReport:
    bootstrap_path: str
    updates: list[UpdateRecord]

    def as_dict(self) -> dict:
        return {
            "bootstrap_path": self.bootstrap_path,
            "updates": [
                {
                    "update_index": u.update_index,
                    "doc_id": u.doc_id,
                    "summary_sentences": u.summary_sentences,
                    "document_sentences": u.document_sentences,
                    "embedded_sentences": u.embedded_sentences,
                    "duration_s": u.duration_s,
                    "output_path": u.output_path,
                    "rouge": u.rouge.as_dict() if u.rouge else None,
                }
                for u in self.updates
            ],
        }


def read_document(path: Path, config: TextConfig | None = None) -> Document:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read document {path}: {exc}") from exc
    return Document.from_text(path.name, text, config)


def read_summary_file(path: Path, config: TextConfig | None = None) -> Document:
    """Read a previously emitted summary: one sentence per line."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read summary {path}: {exc}") from exc
    lines = [line for line in text.splitlines() if line.strip()]
    return Document.from_sentences(path.name, lines, config)


def read_query(path: Path, config: TextConfig | None = None) -> Query:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read query {path}: {exc}") from exc
    return Query.from_text(text, config)


def load_models(model_dir: Path, config: TextConfig | None = None) -> list[list[str]]:
    """Tokenize every model summary file in the directory."""
    try:
        paths = sorted(p for p in model_dir.iterdir() if p.is_file())
    except OSError as exc:
        raise ConfigError(f"cannot read model directory {model_dir}: {exc}") from exc
    if not paths:
        raise ConfigError(f"model directory {model_dir} contains no files")
    models = []
    for p in paths:
        try:
            models.append(tokenize(p.read_text(encoding="utf-8"), config))
        except OSError as exc:
            raise ConfigError(f"cannot read model {p}: {exc}") from exc
    return models


def update_summary(
    current_summary: Document,
    new_document: Document,
    query: Query,
    scoring: ScoringConfig | None = None,
    selection: SelectionConfig | None = None,
) -> tuple[Summary, EmbeddedDocument]:
    """One incremental step: embed, rescore, and extract the new summary."""
    scoring = scoring or ScoringConfig()
    selection = selection or SelectionConfig()
    embedded = embed(current_summary, new_document)
    doc = embedded.document
    graph = build_graph(doc, scoring.adjacency_threshold)
    table = score_document(doc, query, graph, scoring)
    summary = select_summary(doc, query, table, graph, clamped(selection, doc.sentence_count))
    return summary, embedded


def write_summary(summary: Summary, path: Path) -> None:
    lines = summary.lines()
    path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def write_meta(path: Path, header: dict[str, object], summary: Summary) -> None:
    lines = [f"{k} = {v}" for k, v in header.items()]
    for i, pick in enumerate(summary.picks):
        lines.append(f"pick.{i}.index = {pick.index}")
        lines.append(f"pick.{i}.phase = {pick.phase}")
        lines.append(f"pick.{i}.base = {pick.base_score!r}")
        temp = "none" if pick.temp_score is None else repr(pick.temp_score)
        lines.append(f"pick.{i}.temp = {temp}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _write_rouge(path: Path, report: RougeReport) -> None:
    lines = [f"{k} = {v!r}" for k, v in report.as_dict().items()]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def run_cluster(cfg: RunConfig) -> RunReport:
    """Execute the full protocol over one document cluster."""
    cfg.validate()
    if not cfg.corpus_dir.is_dir():
        raise ConfigError(f"corpus directory {cfg.corpus_dir} does not exist")
    paths = sorted(p for p in cfg.corpus_dir.iterdir() if p.is_file())
    if len(paths) < cfg.total_docs:
        raise ConfigError(
            f"corpus {cfg.corpus_dir} has {len(paths)} documents, need {cfg.total_docs}"
        )
    paths = paths[: cfg.total_docs]
    query = read_query(cfg.query_file, cfg.text)
    models = load_models(cfg.model_dir, cfg.text) if cfg.model_dir else None
    documents = [read_document(p, cfg.text) for p in paths]

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    seed = bootstrap_summary(documents[: cfg.bootstrap_docs], query, cfg.bootstrap)
    bootstrap_path = cfg.out_dir / "bootstrap.txt"
    write_summary(seed, bootstrap_path)
    write_meta(
        cfg.out_dir / "bootstrap.meta.txt",
        {"documents": cfg.bootstrap_docs, "sentences": len(seed.sentences)},
        seed,
    )

    current = seed.to_document("summary-0000", cfg.text)
    records: list[UpdateRecord] = []
    for update_index, document in enumerate(documents[cfg.bootstrap_docs :], start=1):
        started = time.perf_counter()
        summary, embedded = update_summary(current, document, query, cfg.scoring, cfg.selection)
        duration = time.perf_counter() - started

        stem = f"update_{update_index:02d}"
        out_path = cfg.out_dir / f"{stem}.txt"
        write_summary(summary, out_path)
        truncated = truncate_words(summary, cfg.word_limit)
        (cfg.out_dir / f"{stem}.trunc.txt").write_text(truncated + "\n", encoding="utf-8")
        write_meta(
            cfg.out_dir / f"{stem}.meta.txt",
            {
                "update": update_index,
                "doc": document.doc_id,
                "sentences.summary": current.sentence_count,
                "sentences.document": document.sentence_count,
                "sentences.embedded": embedded.document.sentence_count,
            },
            summary,
        )

        report = None
        if models is not None:
            report = evaluate(tokenize(truncated, cfg.text), models, cfg.weight_exponent)
            _write_rouge(cfg.out_dir / f"{stem}.rouge.txt", report)

        records.append(
            UpdateRecord(
                update_index=update_index,
                doc_id=document.doc_id,
                summary_sentences=current.sentence_count,
                document_sentences=document.sentence_count,
                embedded_sentences=embedded.document.sentence_count,
                duration_s=duration,
                output_path=str(out_path),
                rouge=report,
            )
        )
        current = summary.to_document(f"summary-{update_index:04d}", cfg.text)

    run_report = RunReport(bootstrap_path=str(bootstrap_path), updates=records)
    (cfg.out_dir / "run_report.json").write_text(
        json.dumps(run_report.as_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return run_report


def load_config_file(path: Path) -> dict[str, str]:
    """Parse a flat key-value config file: one `dotted.key = value` per line."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values
