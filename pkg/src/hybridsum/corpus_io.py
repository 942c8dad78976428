"""Corpus, reference, result, and label file I/O.

All loaders return new immutable values; nothing here mutates shared
state, so concurrent use over distinct files is safe.

File formats:
  dataset CSV     header id,hashtags,text  (hashtags '|'-separated)
  references CSV  header id,summary
  results JSONL   one object per line, stable key order
  labels CSV      header id,label,origin,annotator,timestamp
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from .errors import DuplicateIdError, RowValidationError, SchemaError
from .evaluation import LabelRecord
from .models import HybridResult, SummaryCandidate
from .preprocess import normalize
from .similarity import SimilarityScore

logger = logging.getLogger(__name__)

CORPUS_COLUMNS = ("id", "hashtags", "text")
REFERENCE_COLUMNS = ("id", "summary")
LABEL_COLUMNS = ("id", "label", "origin", "annotator", "timestamp")


@dataclass(frozen=True)
class Post:
    id: str
    hashtags: frozenset[str]
    raw_text: str
    degenerate: bool = False  # empty text, loaded but excluded by the runner


@dataclass(frozen=True)
class CorpusStats:
    row_count: int
    char_count: int
    byte_size: int


@dataclass(frozen=True)
class Corpus:
    posts: tuple[Post, ...]
    source_path: str
    stats: CorpusStats


@dataclass(frozen=True)
class ReferenceSet:
    entries: dict[str, str]

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, post_id: str) -> str | None:
        return self.entries.get(post_id)


def _compute_stats(posts: tuple[Post, ...]) -> CorpusStats:
    return CorpusStats(
        row_count=len(posts),
        char_count=sum(len(p.raw_text) for p in posts),
        byte_size=sum(len(p.raw_text.encode("utf-8")) for p in posts),
    )


def _parse_hashtags(cell: str) -> frozenset[str]:
    tags = set()
    for raw in cell.split("|"):
        tag = raw.strip().lstrip("#").lower()
        if tag:
            tags.add(tag)
    return frozenset(tags)


def _make_post(post_id: str, hashtags: frozenset[str], text: str) -> Post:
    return Post(
        id=post_id, hashtags=hashtags, raw_text=text, degenerate=not text.strip()
    )


def load_corpus(path: str | Path, format: str = "csv") -> Corpus:
    """Load a corpus file; one Post per data row, in file order."""
    path = Path(path)
    if format == "csv":
        posts = _load_corpus_csv(path)
    elif format == "jsonl":
        posts = _load_corpus_jsonl(path)
    else:
        raise ValueError(f"unknown corpus format {format!r} (expected csv or jsonl)")
    seen: set[str] = set()
    for post in posts:
        if not post.id:
            raise SchemaError(f"{path}: empty post id")
        if post.id in seen:
            raise DuplicateIdError(f"{path}: duplicate post id {post.id!r}")
        seen.add(post.id)
    posts_t = tuple(posts)
    return Corpus(posts=posts_t, source_path=str(path), stats=_compute_stats(posts_t))


def _load_corpus_csv(path: Path) -> list[Post]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in CORPUS_COLUMNS:
            if column not in header:
                raise SchemaError(f"{path}: missing required column {column!r}")
        extra = [c for c in header if c not in CORPUS_COLUMNS]
        if extra:
            logger.warning("%s: ignoring extra columns %s", path, extra)
        return [
            _make_post(row["id"], _parse_hashtags(row["hashtags"] or ""), row["text"] or "")
            for row in reader
        ]


def _load_corpus_jsonl(path: Path) -> list[Post]:
    posts = []
    with open(path, encoding="utf-8") as fh:
        for number, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise RowValidationError(f"{path}: invalid JSON ({exc})", number) from exc
            for key in ("id", "text"):
                if key not in obj:
                    raise SchemaError(f"{path}: missing required field {key!r}")
            tags = obj.get("hashtags") or []
            if isinstance(tags, str):
                hashtags = _parse_hashtags(tags)
            else:
                hashtags = frozenset(t.strip().lstrip("#").lower() for t in tags if t.strip())
            posts.append(_make_post(str(obj["id"]), hashtags, str(obj["text"])))
    return posts


def filter_by_hashtag(corpus: Corpus, tags: set[str]) -> Corpus:
    """Keep posts whose hashtag set intersects tags, order preserved."""
    if not tags:
        raise ValueError("hashtag filter needs at least one tag")
    wanted = frozenset(t.strip().lstrip("#").lower() for t in tags)
    kept = tuple(p for p in corpus.posts if p.hashtags & wanted)
    return Corpus(posts=kept, source_path=corpus.source_path, stats=_compute_stats(kept))


def deduplicate(corpus: Corpus) -> Corpus:
    """Drop rows whose normalized text already occurred; keep first hits."""
    seen: set[str] = set()
    kept = []
    for post in corpus.posts:
        key = normalize(post.raw_text)
        if key in seen:
            continue
        seen.add(key)
        kept.append(post)
    kept_t = tuple(kept)
    return Corpus(posts=kept_t, source_path=corpus.source_path, stats=_compute_stats(kept_t))


def load_references(path: str | Path) -> ReferenceSet:
    """Load the id -> reference summary map; empty summaries are rejected."""
    path = Path(path)
    entries: dict[str, str] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in REFERENCE_COLUMNS:
            if column not in header:
                raise SchemaError(f"{path}: missing required column {column!r}")
        for number, row in enumerate(reader, start=2):  # header is row 1
            post_id = (row["id"] or "").strip()
            summary = (row["summary"] or "").strip()
            if not post_id:
                raise RowValidationError(f"{path}: empty id", number)
            if not summary:
                raise RowValidationError(f"{path}: empty summary for id {post_id!r}", number)
            if post_id in entries:
                raise DuplicateIdError(f"{path}: duplicate reference id {post_id!r}")
            entries[post_id] = summary
    return ReferenceSet(entries=entries)


# --- results JSONL ---------------------------------------------------------

def _candidate_to_obj(candidate: SummaryCandidate | None) -> dict | None:
    if candidate is None:
        return None
    obj = {
        "source": candidate.source,
        "text": candidate.text,
        "word_count": candidate.word_count,
    }
    if candidate.score is not None:
        obj["cosine"] = candidate.score.cosine
        obj["semantic"] = candidate.score.semantic
        obj["combined"] = candidate.score.combined
    return obj


def _candidate_from_obj(obj: dict | None, alpha: float) -> SummaryCandidate | None:
    if obj is None:
        return None
    score = None
    if "combined" in obj:
        score = SimilarityScore(
            cosine=obj["cosine"], semantic=obj["semantic"], combined=obj["combined"], alpha=alpha
        )
    return SummaryCandidate(
        text=obj["text"], source=obj["source"], word_count=obj["word_count"], score=score
    )


def result_to_obj(result: HybridResult) -> dict:
    """JSON object for one result line; key order is part of the format."""
    alpha = result.final.score.alpha if result.final.score else None
    return {
        "id": result.post_id,
        "final_summary": result.final.text,
        "final_source": result.final.source,
        "extractive_choice": _candidate_to_obj(result.extractive_choice),
        "abstractive_choice": _candidate_to_obj(result.abstractive_choice),
        "scores": {
            "alpha": alpha,
            "final_combined": result.final.score.combined if result.final.score else None,
            "flags": list(result.flags),
        },
    }


def result_from_obj(obj: dict) -> HybridResult:
    alpha = obj["scores"].get("alpha") or 0.5
    extractive = _candidate_from_obj(obj["extractive_choice"], alpha)
    abstractive = _candidate_from_obj(obj["abstractive_choice"], alpha)
    if extractive is not None and obj["final_source"] == extractive.source:
        final, branch = extractive, "extractive"
    elif abstractive is not None and obj["final_source"] == abstractive.source:
        final, branch = abstractive, "abstractive"
    else:
        raise SchemaError(f"result {obj.get('id')!r}: final_source matches no choice")
    return HybridResult(
        post_id=obj["id"],
        extractive_choice=extractive,
        abstractive_choice=abstractive,
        final=final,
        final_branch=branch,
        flags=tuple(obj["scores"].get("flags") or ()),
    )


def write_results(path: str | Path, results: list[HybridResult]) -> None:
    """One JSON object per line; byte-stable for identical input."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for result in results:
            fh.write(json.dumps(result_to_obj(result), ensure_ascii=False))
            fh.write("\n")


def load_results(path: str | Path) -> list[HybridResult]:
    results = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                results.append(result_from_obj(json.loads(line)))
    return results


# --- labels CSV -------------------------------------------------------------

def label_to_row(record: LabelRecord) -> list[str]:
    return [record.post_id, record.label, record.origin, record.annotator, record.timestamp]


def write_labels(path: str | Path, records: list[LabelRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(LABEL_COLUMNS)
        for record in records:
            writer.writerow(label_to_row(record))


def append_label(path: str | Path, record: LabelRecord) -> None:
    """Append one record as a single atomic line write."""
    import io

    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerow(label_to_row(record))
    with open(path, "a", encoding="utf-8", newline="") as fh:
        fh.write(buffer.getvalue())
        fh.flush()


def load_labels(path: str | Path) -> list[LabelRecord]:
    records = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in LABEL_COLUMNS:
            if column not in header:
                raise SchemaError(f"{path}: missing required column {column!r}")
        for number, row in enumerate(reader, start=2):
            label = (row["label"] or "").strip()
            if label not in ("P", "N"):
                raise RowValidationError(f"{path}: invalid label {label!r}", number)
            records.append(
                LabelRecord(
                    post_id=row["id"],
                    label=label,
                    origin=row["origin"],
                    annotator=row["annotator"] or "",
                    timestamp=row["timestamp"] or "",
                )
            )
    return records
