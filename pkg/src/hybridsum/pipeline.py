"""End-to-end batch run: load, filter, summarize, label, report.

Per-post failures are logged and counted against the error budget; the
run only fails once more than the budgeted share of posts errored.
With the stub backend the whole run is deterministic, so repeated runs
write byte-identical artifacts.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import abstractive, corpus_io, evaluation, preprocess, selector
from .config import PipelineConfig
from .errors import MissingReferenceError, StartupError
from .evaluation import ConfusionMatrix, MetricsReport
from .similarity import SynonymLexicon

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunSummary:
    posts_loaded: int
    posts_after_filter: int
    posts_after_dedup: int
    degenerate_skipped: int
    summarized: int
    failed: int
    labeled: int
    unreferenced: int
    runtime_s: float
    ok: bool


def _check_readable(path: str | None, what: str) -> None:
    if path is None:
        return
    try:
        with open(path, "rb"):
            pass
    except OSError as exc:
        raise StartupError(f"cannot read {what} at {path}: {exc}") from exc


def metrics_to_obj(report: MetricsReport, cm: ConfusionMatrix) -> dict:
    return {
        "accuracy": report.accuracy,
        "precision": report.precision,
        "recall": report.recall,
        "f_measure": report.f_measure,
        "error_rate": report.error_rate,
        "flags": list(report.flags),
        "confusion": {"tp": cm.tp, "fp": cm.fp, "tn": cm.tn, "fn": cm.fn, "total": cm.total},
    }


def write_metrics(path, report: MetricsReport, cm: ConfusionMatrix) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(metrics_to_obj(report, cm), fh, indent=2, ensure_ascii=False)
        fh.write("\n")


def write_selection_stats(path, stats: evaluation.SelectionStats) -> None:
    obj = {
        "extractive_count": stats.extractive_count,
        "abstractive_count": stats.abstractive_count,
        "mean_similarity_by_branch": stats.mean_similarity_by_branch,
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(obj, fh, indent=2, ensure_ascii=False)
        fh.write("\n")


def run_pipeline(config: PipelineConfig) -> RunSummary:
    """Execute the full batch and write the run artifacts.

    Raises StartupError before touching the output directory when an
    input is unreadable; afterwards per-post errors are absorbed up to
    the error budget.
    """
    started = time.monotonic()
    _check_readable(config.input_path, "corpus")
    _check_readable(config.references_path, "references")
    _check_readable(config.stopwords_path, "stopword list")
    _check_readable(config.lexicon_path, "synonym lexicon")
    _check_readable(config.abbreviations_path, "abbreviation list")
    if not any(abstractive.is_reachable(b) for b in config.backends):
        raise StartupError(
            "no abstractive backend is reachable and no stub is configured"
        )

    config.run_dir.mkdir(parents=True, exist_ok=True)
    log_handler = logging.FileHandler(config.run_log_file, mode="w", encoding="utf-8")
    log_handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger("hybridsum")
    root.addHandler(log_handler)
    root.setLevel(logging.INFO)
    try:
        return _run(config, started)
    finally:
        root.removeHandler(log_handler)
        log_handler.close()


def _run(config: PipelineConfig, started: float) -> RunSummary:
    pre_config = preprocess.PreprocessConfig.from_paths(
        stopword_path=config.stopwords_path,
        abbreviation_path=config.abbreviations_path,
    )
    lexicon = SynonymLexicon.load(config.lexicon_path) if config.lexicon_path else SynonymLexicon()
    references = corpus_io.load_references(config.references_path)

    corpus = corpus_io.load_corpus(config.input_path, format=config.input_format)
    posts_loaded = corpus.stats.row_count
    if config.hashtag_filter:
        corpus = corpus_io.filter_by_hashtag(corpus, set(config.hashtag_filter))
    posts_after_filter = corpus.stats.row_count
    corpus = corpus_io.deduplicate(corpus)
    posts_after_dedup = corpus.stats.row_count

    workable = [p for p in corpus.posts if not p.degenerate]
    degenerate_skipped = posts_after_dedup - len(workable)
    if degenerate_skipped:
        logger.info("skipping %d degenerate (empty) posts", degenerate_skipped)

    def work(post: corpus_io.Post):
        doc = preprocess.preprocess_post(post, pre_config)
        return selector.summarize_hybrid(
            doc,
            post.raw_text,
            cfg=config.selector,
            params=config.extractive,
            backends=list(config.backends),
            lexicon=lexicon,
            config=pre_config,
            max_workers=config.concurrency,
        )

    results = []
    failures = 0
    with ThreadPoolExecutor(max_workers=config.concurrency) as pool:
        for post, outcome in zip(workable, pool.map(lambda p: _guard(work, p), workable)):
            if isinstance(outcome, Exception):
                failures += 1
                logger.error("post %s failed: %s", post.id, outcome)
            else:
                results.append(outcome)

    labels = []
    unreferenced = 0
    for result in results:
        reference = references.get(result.post_id)
        try:
            labels.append(
                evaluation.threshold_label(
                    result,
                    reference,
                    threshold=config.threshold,
                    alpha=config.selector.alpha,
                    lexicon=lexicon,
                    config=pre_config,
                )
            )
        except MissingReferenceError:
            unreferenced += 1
            logger.warning("post %s has no reference summary; not labeled", result.post_id)

    corpus_io.write_results(config.results_file, results)
    corpus_io.write_labels(config.labels_file, labels)
    report, cm = evaluation.label_join_metrics(labels)
    write_metrics(config.metrics_file, report, cm)
    write_selection_stats(config.selection_stats_file, evaluation.selection_stats(results))

    attempted = len(workable)
    ok = attempted == 0 or failures / attempted <= config.error_budget
    if not ok:
        logger.error("error budget exceeded: %d of %d posts failed", failures, attempted)
    summary = RunSummary(
        posts_loaded=posts_loaded,
        posts_after_filter=posts_after_filter,
        posts_after_dedup=posts_after_dedup,
        degenerate_skipped=degenerate_skipped,
        summarized=len(results),
        failed=failures,
        labeled=len(labels),
        unreferenced=unreferenced,
        runtime_s=time.monotonic() - started,
        ok=ok,
    )
    logger.info("run finished: %s", summary)
    return summary


def _guard(fn, post):
    # Any per-post exception is absorbed into the error budget.
    try:
        return fn(post)
    except Exception as exc:
        return exc


def evaluate_artifacts(config: PipelineConfig) -> tuple[MetricsReport, ConfusionMatrix]:
    """Recompute metrics and selection stats from an existing run directory."""
    if not config.results_file.is_file():
        raise StartupError(f"no results file at {config.results_file}; run the pipeline first")
    if not config.labels_file.is_file():
        raise StartupError(f"no labels file at {config.labels_file}; run the pipeline first")
    labels = corpus_io.load_labels(config.labels_file)
    report, cm = evaluation.label_join_metrics(labels)
    write_metrics(config.metrics_file, report, cm)
    results = corpus_io.load_results(config.results_file)
    write_selection_stats(config.selection_stats_file, evaluation.selection_stats(results))
    return report, cm
