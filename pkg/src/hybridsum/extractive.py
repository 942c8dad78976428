"""Extractive candidates: graph-based sentence ranking.

Two graph constructions over one document's sentences feed the same
damped stationary-score iteration:

* word-overlap weights normalized by log sentence lengths, and
* sentence-level TF-IDF cosine weights with a cut-off threshold.

Top-ranked sentences are re-emitted verbatim, in document order.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import _ranking
from .errors import DegenerateInputError
from .models import SummaryCandidate
from .preprocess import PreprocessedDoc
from .similarity import cosine_similarity

SOURCE_TEXTRANK = "textrank"
SOURCE_LEXRANK = "lexrank"


@dataclass(frozen=True)
class ExtractiveParams:
    damping: float = 0.85
    epsilon: float = 1e-6
    max_iter: int = 100
    k: int = 1
    lexrank_threshold: float = 0.1

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ValueError(f"damping must be in (0, 1), got {self.damping}")
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if not 0.0 <= self.lexrank_threshold < 1.0:
            raise ValueError("lexrank_threshold must be in [0, 1)")


@dataclass(frozen=True)
class SentenceGraph:
    """Symmetric non-negative edge weights with a zero diagonal."""

    weights: np.ndarray

    @property
    def n(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True)
class RankVector:
    scores: tuple[float, ...]


def build_textrank_graph(doc: PreprocessedDoc) -> SentenceGraph:
    """Shared-token-type counts scaled down by log sentence lengths.

    When either sentence holds fewer than two tokens the log-length
    denominator is replaced by 1 to keep the weight finite.
    """
    _require_sentences(doc)
    n = len(doc.sentences)
    token_sets = [set(s.tokens) for s in doc.sentences]
    lengths = [len(s.tokens) for s in doc.sentences]
    weights = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            shared = len(token_sets[i] & token_sets[j])
            if shared == 0:
                continue
            if lengths[i] < 2 or lengths[j] < 2:
                denom = 1.0
            else:
                denom = math.log(lengths[i]) + math.log(lengths[j])
            weights[i, j] = weights[j, i] = shared / denom
    return SentenceGraph(weights=weights)


def build_lexrank_graph(doc: PreprocessedDoc, threshold: float = 0.1) -> SentenceGraph:
    """Sentence TF-IDF cosine weights; entries below threshold become 0.

    IDF is computed over this document's sentences: idf(t) = ln(n / df(t))
    with df counting the sentences containing t.
    """
    _require_sentences(doc)
    n = len(doc.sentences)
    df: Counter[str] = Counter()
    for sentence in doc.sentences:
        df.update(set(sentence.tokens))
    idf = {term: math.log(n / count) for term, count in df.items()}
    vectors = []
    for sentence in doc.sentences:
        tf = Counter(sentence.tokens)
        vectors.append({t: count * idf[t] for t, count in tf.items() if idf[t] > 0.0})
    weights = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            sim = cosine_similarity(vectors[i], vectors[j])
            if sim >= threshold:
                weights[i, j] = weights[j, i] = sim
    return SentenceGraph(weights=weights)


def power_iterate(graph: SentenceGraph, params: ExtractiveParams | None = None) -> RankVector:
    """Damped stationary scores of the graph, normalized to sum 1."""
    params = params or ExtractiveParams()
    weights = graph.weights
    if weights.shape[0] == 0:
        raise DegenerateInputError("cannot rank an empty graph")
    if not np.isfinite(weights).all():
        raise ValueError("graph weights must be finite")
    scores = _ranking.power_iterate(weights, params.damping, params.epsilon, params.max_iter)
    return RankVector(scores=tuple(float(s) for s in scores))


def _require_sentences(doc: PreprocessedDoc) -> None:
    if not doc.sentences:
        raise DegenerateInputError(f"document {doc.post_id!r} has no sentences")


def _top_k_in_order(scores: tuple[float, ...], k: int) -> list[int]:
    # Ties break toward the lower sentence index, for deterministic output.
    ranked = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    return sorted(ranked[: min(k, len(scores))])


def _summary_from_graph(
    doc: PreprocessedDoc, graph: SentenceGraph, params: ExtractiveParams, source: str
) -> SummaryCandidate:
    ranks = power_iterate(graph, params)
    chosen = _top_k_in_order(ranks.scores, params.k)
    text = " ".join(doc.sentences[i].text for i in chosen)
    return SummaryCandidate.make(text=text, source=source)


def textrank_summary(
    doc: PreprocessedDoc, params: ExtractiveParams | None = None
) -> SummaryCandidate:
    params = params or ExtractiveParams()
    return _summary_from_graph(doc, build_textrank_graph(doc), params, SOURCE_TEXTRANK)


def lexrank_summary(
    doc: PreprocessedDoc, params: ExtractiveParams | None = None
) -> SummaryCandidate:
    params = params or ExtractiveParams()
    graph = build_lexrank_graph(doc, params.lexrank_threshold)
    return _summary_from_graph(doc, graph, params, SOURCE_LEXRANK)
