"""HTTP review service backing the human labeling workflow.

Serves the reviewed queue out of a finished run directory, records P/N
submissions, and recomputes metrics on demand from the current label
file: human labels act as gold, threshold labels as predicted.  Metrics
always come from the evaluation module over the label join; the service
keeps no counters of its own.
"""

from __future__ import annotations

import socket
import threading
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import corpus_io, evaluation, pipeline
from .config import PipelineConfig
from .errors import StartupError
from .evaluation import LabelRecord, majority_gold
from .models import HybridResult


class ReviewState:
    """Results, source texts, references, and the label file.

    Reads are lock-free over immutable snapshots; every label write goes
    through one lock that appends the CSV line and updates the in-memory
    list atomically.
    """

    def __init__(self, config: PipelineConfig):
        if not config.results_file.is_file():
            raise StartupError(
                f"no results at {config.results_file}; run `summarize run` first"
            )
        self.config = config
        self.results: list[HybridResult] = corpus_io.load_results(config.results_file)
        self.by_id = {r.post_id: r for r in self.results}
        corpus = corpus_io.load_corpus(config.input_path, format=config.input_format)
        self.source_texts = {p.id: p.raw_text for p in corpus.posts}
        self.references = corpus_io.load_references(config.references_path).entries
        self._write_lock = threading.Lock()
        if config.labels_file.is_file():
            self.labels = corpus_io.load_labels(config.labels_file)
        else:
            corpus_io.write_labels(config.labels_file, [])
            self.labels = []

    def add_label(self, record: LabelRecord) -> None:
        with self._write_lock:
            corpus_io.append_label(self.config.labels_file, record)
            self.labels = self.labels + [record]

    def queue(self, unlabeled_only: bool) -> list[dict]:
        gold = majority_gold(self.labels)
        items = []
        for result in self.results:
            label = gold.get(result.post_id)
            if unlabeled_only and label is not None:
                continue
            items.append(
                {
                    "post_id": result.post_id,
                    "source_text": self.source_texts.get(result.post_id, ""),
                    "final_summary": result.final.text,
                    "reference_summary": self.references.get(result.post_id),
                    "existing_label": label,
                }
            )
        return items


def create_app(config: PipelineConfig) -> FastAPI:
    state = ReviewState(config)
    app = FastAPI(title="summary review service")
    app.state.review = state

    @app.get("/api/queue")
    def get_queue(unlabeled: bool = False):
        return state.queue(unlabeled_only=unlabeled)

    @app.get("/api/results/{post_id}")
    def get_result(post_id: str):
        result = state.by_id.get(post_id)
        if result is None:
            raise HTTPException(status_code=404, detail=f"unknown post id {post_id!r}")
        return corpus_io.result_to_obj(result)

    @app.post("/api/labels")
    async def post_label(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="body must be JSON")
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="body must be a JSON object")
        post_id = body.get("post_id")
        label = body.get("label")
        annotator = body.get("annotator")
        if not post_id or post_id not in state.by_id:
            raise HTTPException(status_code=400, detail=f"unknown post id {post_id!r}")
        if label not in ("P", "N"):
            raise HTTPException(status_code=400, detail="label must be 'P' or 'N'")
        if not annotator or not str(annotator).strip():
            raise HTTPException(status_code=400, detail="annotator must be nonempty")
        record = LabelRecord(
            post_id=post_id,
            label=label,
            origin=evaluation.ORIGIN_HUMAN,
            annotator=str(annotator).strip(),
            timestamp=datetime.now(timezone.utc).isoformat(),
        )
        state.add_label(record)
        return JSONResponse(status_code=201, content={"status": "recorded"})

    @app.get("/api/metrics")
    def get_metrics():
        report, cm = evaluation.label_join_metrics(state.labels)
        return pipeline.metrics_to_obj(report, cm)

    @app.get("/api/stats")
    def get_stats():
        stats = evaluation.selection_stats(state.results)
        return {
            "extractive_count": stats.extractive_count,
            "abstractive_count": stats.abstractive_count,
            "mean_similarity_by_branch": stats.mean_similarity_by_branch,
        }

    ui_dir = Path(config.ui_path) if config.ui_path else None
    if ui_dir and ui_dir.is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    else:

        @app.get("/")
        def index():
            return {
                "service": "summary review",
                "endpoints": ["/api/queue", "/api/results/{id}", "/api/labels", "/api/metrics", "/api/stats"],
            }

    return app


def serve_review(config: PipelineConfig, port: int, host: str = "127.0.0.1") -> None:
    """Run the review service until interrupted."""
    import uvicorn

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
    except OSError as exc:
        raise StartupError(f"cannot bind {host}:{port}: {exc}") from exc
    finally:
        probe.close()
    app = create_app(config)
    uvicorn.run(app, host=host, port=port, log_level="warning")
