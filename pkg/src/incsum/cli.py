"""Command-line front end.

Subcommands:
  bootstrap  build the seed summary over the first documents of a corpus
  update     one incremental step: prior summary + new document -> summary
  run        the full cluster protocol with per-update artifacts
  rouge      score a candidate text against a directory of model summaries

Settings resolve in three layers: built-in defaults, then a `--config` file
of `dotted.key = value` lines, then explicit flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bootstrap import BootstrapConfig, bootstrap_summary
from .embedder import format_trace
from .graph import build_graph, dump_edges
from .pipeline import (
    ConfigError,
    RunConfig,
    load_config_file,
    load_models,
    read_document,
    read_query,
    read_summary_file,
    run_cluster,
    update_summary,
    write_meta,
    write_summary,
)
from .rouge import DEFAULT_WEIGHT_EXPONENT, evaluate
from .scorer import ScoringConfig, dump_scores, score_document
from .selector import SelectionConfig, truncate_words
from .textcore import TextConfig, tokenize

# dotted config key -> (flag attribute, type)
_KEYS = {
    "scoring.d": ("bias_d", float),
    "scoring.adjacency_threshold": ("threshold", float),
    "selection.summary_size": ("summary_size", int),
    "selection.lambda": ("lambda_", float),
    "selection.kappa": ("kappa", float),
    "bootstrap.w_centroid": ("w_centroid", float),
    "bootstrap.w_position": ("w_position", float),
    "bootstrap.w_query": ("w_query", float),
    "bootstrap.mmr_sim_threshold": ("mmr_sim_threshold", float),
    "bootstrap.summary_sentences": ("bootstrap_sentences", int),
    "run.bootstrap_docs": ("bootstrap_docs", int),
    "run.total_docs": ("total_docs", int),
    "run.word_limit": ("word_limit", int),
    "rouge.weight_exponent": ("weight_exponent", float),
    "text.stop_words_file": ("stop_words", Path),
}


def _settings(args: argparse.Namespace) -> dict[str, object]:
    """Merge config-file values under explicit flags (flags win)."""
    merged: dict[str, object] = {}
    config_path = getattr(args, "config", None)
    if config_path:
        raw = load_config_file(Path(config_path))
        for key, value in raw.items():
            if key not in _KEYS:
                raise ConfigError(f"unknown config key {key!r}")
            attr, cast = _KEYS[key]
            try:
                merged[attr] = cast(value)
            except ValueError as exc:
                raise ConfigError(f"bad value for {key}: {value!r}") from exc
    for attr, _ in _KEYS.values():
        flag = getattr(args, attr, None)
        if flag is not None:
            merged[attr] = flag
    return merged


def _get(settings: dict[str, object], attr: str, default):
    return settings.get(attr, default)


def _text_config(settings: dict[str, object]) -> TextConfig:
    stop_path = settings.get("stop_words")
    if stop_path is None:
        return TextConfig()
    words = frozenset(
        w.strip().lower() for w in Path(stop_path).read_text(encoding="utf-8").splitlines() if w.strip()
    )
    return TextConfig(remove_stop_words=True, stop_words=words)


def _scoring_config(settings: dict[str, object]) -> ScoringConfig:
    return ScoringConfig(
        d=_get(settings, "bias_d", 0.85),
        adjacency_threshold=_get(settings, "threshold", 0.001),
    )


def _selection_config(settings: dict[str, object]) -> SelectionConfig:
    return SelectionConfig(
        summary_size=_get(settings, "summary_size", 12),
        lambda_=_get(settings, "lambda_", 0.7),
        kappa=_get(settings, "kappa", 20.0),
    )


def _bootstrap_config(settings: dict[str, object]) -> BootstrapConfig:
    return BootstrapConfig(
        w_centroid=_get(settings, "w_centroid", 1.0),
        w_position=_get(settings, "w_position", 1.0),
        w_query=_get(settings, "w_query", 10.0),
        mmr_sim_threshold=_get(settings, "mmr_sim_threshold", 0.6),
        summary_sentences=_get(settings, "bootstrap_sentences", 12),
    )


def _cmd_bootstrap(args: argparse.Namespace) -> int:
    settings = _settings(args)
    text_cfg = _text_config(settings)
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise ConfigError(f"corpus directory {corpus} does not exist")
    paths = sorted(p for p in corpus.iterdir() if p.is_file())
    docs_wanted = args.docs
    if len(paths) < docs_wanted:
        raise ConfigError(f"corpus {corpus} has {len(paths)} documents, need {docs_wanted}")
    docs = [read_document(p, text_cfg) for p in paths[:docs_wanted]]
    query = read_query(Path(args.query), text_cfg)
    summary = bootstrap_summary(docs, query, _bootstrap_config(settings))
    write_summary(summary, Path(args.out))
    if args.meta:
        write_meta(
            Path(args.meta),
            {"documents": docs_wanted, "sentences": len(summary.sentences)},
            summary,
        )
    print(f"wrote {len(summary.sentences)} sentences to {args.out}")
    return 0


def _cmd_update(args: argparse.Namespace) -> int:
    settings = _settings(args)
    text_cfg = _text_config(settings)
    current = read_summary_file(Path(args.summary), text_cfg)
    document = read_document(Path(args.doc), text_cfg)
    query = read_query(Path(args.query), text_cfg)
    scoring = _scoring_config(settings)
    summary, embedded = update_summary(
        current, document, query, scoring, _selection_config(settings)
    )
    if args.trace:
        sys.stderr.write(format_trace(embedded))
    if args.dump_graph:
        Path(args.dump_graph).write_text(
            dump_edges(build_graph(embedded.document, scoring.adjacency_threshold)),
            encoding="utf-8",
        )
    if args.dump_scores:
        graph = build_graph(embedded.document, scoring.adjacency_threshold)
        table = score_document(embedded.document, query, graph, scoring)
        Path(args.dump_scores).write_text(dump_scores(table), encoding="utf-8")
    write_summary(summary, Path(args.out))
    if args.meta:
        write_meta(Path(args.meta), {"doc": Path(args.doc).name}, summary)
    if args.truncated_out:
        limit = _get(settings, "word_limit", 250)
        Path(args.truncated_out).write_text(
            truncate_words(summary, limit) + "\n", encoding="utf-8"
        )
    print(f"wrote {len(summary.sentences)} sentences to {args.out}")
    return 0


def _cmd_run(args: argparse.Namespace) -> int:
    settings = _settings(args)
    cfg = RunConfig(
        corpus_dir=Path(args.corpus),
        query_file=Path(args.query),
        out_dir=Path(args.out_dir),
        model_dir=Path(args.models) if args.models else None,
        bootstrap_docs=_get(settings, "bootstrap_docs", 15),
        total_docs=_get(settings, "total_docs", 25),
        word_limit=_get(settings, "word_limit", 250),
        weight_exponent=_get(settings, "weight_exponent", DEFAULT_WEIGHT_EXPONENT),
        scoring=_scoring_config(settings),
        selection=_selection_config(settings),
        bootstrap=_bootstrap_config(settings),
        text=_text_config(settings),
    )
    report = run_cluster(cfg)
    for u in report.updates:
        line = (
            f"update {u.update_index:2d}: {u.doc_id} "
            f"({u.summary_sentences}+{u.document_sentences} -> {u.embedded_sentences} sentences, "
            f"{u.duration_s:.3f}s)"
        )
        if u.rouge:
            line += f" rouge1={u.rouge.rouge1:.5f}"
        print(line)
    print(f"report written to {cfg.out_dir / 'run_report.json'}")
    return 0


def _cmd_rouge(args: argparse.Namespace) -> int:
    settings = _settings(args)
    text_cfg = _text_config(settings)
    candidate_path = Path(args.candidate)
    try:
        candidate = tokenize(candidate_path.read_text(encoding="utf-8"), text_cfg)
    except OSError as exc:
        raise ConfigError(f"cannot read candidate {candidate_path}: {exc}") from exc
    models = load_models(Path(args.models), text_cfg)
    exponent = _get(settings, "weight_exponent", DEFAULT_WEIGHT_EXPONENT)
    report = evaluate(candidate, models, exponent)
    for key, value in report.as_dict().items():
        print(f"{key} = {value!r}")
    if args.json:
        Path(args.json).write_text(
            json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="flat key-value config file")
    parser.add_argument("--stop-words", dest="stop_words", help="newline-delimited stop word file")


def _add_knobs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--bias-d", dest="bias_d", type=float, help="query bias factor")
    parser.add_argument("--threshold", type=float, help="similarity threshold for adjacency")
    parser.add_argument("--summary-size", dest="summary_size", type=int, help="sentences per summary")
    parser.add_argument("--lambda", dest="lambda_", type=float, help="relevance/redundancy trade-off")
    parser.add_argument("--kappa", type=float, help="relevance scaling factor")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="incsum",
        description="Incremental, query-focused extractive summarization",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bootstrap", help="build the seed summary")
    p.add_argument("--corpus", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--meta", help="also write a key-value metadata sidecar here")
    p.add_argument("--docs", type=int, default=15, help="documents to bootstrap over")
    p.add_argument("--w-centroid", dest="w_centroid", type=float)
    p.add_argument("--w-position", dest="w_position", type=float)
    p.add_argument("--w-query", dest="w_query", type=float)
    p.add_argument("--mmr-sim-threshold", dest="mmr_sim_threshold", type=float)
    p.add_argument("--bootstrap-sentences", dest="bootstrap_sentences", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_bootstrap)

    p = sub.add_parser("update", help="update a summary with one new document")
    p.add_argument("--summary", required=True, help="prior summary, one sentence per line")
    p.add_argument("--doc", required=True, help="the newly arrived document")
    p.add_argument("--query", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--meta", help="also write a key-value metadata sidecar here")
    p.add_argument("--truncated-out", dest="truncated_out")
    p.add_argument("--word-limit", dest="word_limit", type=int)
    p.add_argument("--trace", action="store_true", help="log each insertion to stderr")
    p.add_argument("--dump-graph", dest="dump_graph", help="write the edge list here")
    p.add_argument("--dump-scores", dest="dump_scores", help="write base scores here")
    _add_knobs(p)
    _add_common(p)
    p.set_defaults(func=_cmd_update)

    p = sub.add_parser("run", help="full cluster protocol")
    p.add_argument("--corpus", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--out-dir", dest="out_dir", required=True)
    p.add_argument("--models", help="directory of model summaries for evaluation")
    p.add_argument("--bootstrap-docs", dest="bootstrap_docs", type=int)
    p.add_argument("--total-docs", dest="total_docs", type=int)
    p.add_argument("--word-limit", dest="word_limit", type=int)
    p.add_argument("--bootstrap-sentences", dest="bootstrap_sentences", type=int)
    _add_knobs(p)
    _add_common(p)
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("rouge", help="evaluate a candidate against model summaries")
    p.add_argument("--candidate", required=True)
    p.add_argument("--models", required=True)
    p.add_argument("--weight-exponent", dest="weight_exponent", type=float)
    p.add_argument("--json", help="also write the report as JSON here")
    _add_common(p)
    p.set_defaults(func=_cmd_rouge)

    return parser


def cli_entry(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/diagnostics
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (ConfigError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_entry(sys.argv[1:]))


if __name__ == "__main__":
    main()
