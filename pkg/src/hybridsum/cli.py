"""Command-line entry points: run the pipeline, serve review, evaluate."""

from __future__ import annotations

import argparse
import logging
import sys

from .config import load_config
from .errors import StartupError
from .pipeline import evaluate_artifacts, run_pipeline
from .service import serve_review


def _parse_hashtags(value: str | None) -> set[str] | None:
    if value is None:
        return None
    return {t.strip().lstrip("#").lower() for t in value.split(",") if t.strip()}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="summarize",
        description="Hybrid extractive/abstractive summarization of short text posts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the batch pipeline and write artifacts")
    run.add_argument("--config", required=True, help="TOML config file")
    run.add_argument("--threshold", type=float, help="override the P/N similarity threshold")
    run.add_argument("--hashtags", help="comma-separated hashtag filter, overrides config")
    run.add_argument("--output", help="override the run directory")

    serve = sub.add_parser("serve", help="serve the review API over a finished run")
    serve.add_argument("--config", required=True)
    serve.add_argument("--port", type=int, required=True)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--ui", help="directory with the built annotation UI")

    ev = sub.add_parser("eval", help="recompute metrics from existing artifacts")
    ev.add_argument("--config", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            config = load_config(
                args.config,
                threshold=args.threshold,
                hashtags=_parse_hashtags(args.hashtags),
                output=args.output,
            )
            summary = run_pipeline(config)
            print(
                f"loaded {summary.posts_loaded} posts "
                f"({summary.posts_after_filter} after filter, "
                f"{summary.posts_after_dedup} after dedup, "
                f"{summary.degenerate_skipped} degenerate skipped)"
            )
            print(
                f"summarized {summary.summarized}, failed {summary.failed}, "
                f"labeled {summary.labeled} in {summary.runtime_s:.2f}s"
            )
            print(f"artifacts in {config.run_dir}")
            if not summary.ok:
                print("error budget exceeded; run failed", file=sys.stderr)
                return 2
            return 0
        if args.command == "serve":
            config = load_config(args.config, ui=args.ui)
            serve_review(config, port=args.port, host=args.host)
            return 0
        if args.command == "eval":
            config = load_config(args.config)
            report, cm = evaluate_artifacts(config)
            print(
                f"confusion tp={cm.tp} fp={cm.fp} tn={cm.tn} fn={cm.fn} total={cm.total}"
            )
            print(
                f"accuracy={report.accuracy:.3f} precision={report.precision:.3f} "
                f"recall={report.recall:.3f} f_measure={report.f_measure:.3f} "
                f"error_rate={report.error_rate:.3f}"
            )
            if report.flags:
                print(f"flags: {', '.join(report.flags)}")
            return 0
    except StartupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
