"""Hybrid extractive/abstractive summarization for short social posts.

Pipeline: corpus ingestion -> preprocessing -> graph-ranked extractive
candidates + backend abstractive candidates -> similarity-driven
selection -> threshold labeling and confusion-matrix evaluation, with an
HTTP review service for human gold labels.
"""

from ._ranking import BACKEND as RANKING_BACKEND
from .abstractive import AbstractiveRequest, BackendSpec, summarize_remote, summarize_stub
from .corpus_io import (
    Corpus,
    Post,
    ReferenceSet,
    deduplicate,
    filter_by_hashtag,
    load_corpus,
    load_references,
    write_results,
)
from .evaluation import (
    ConfusionMatrix,
    LabelRecord,
    MetricsReport,
    confusion,
    metrics,
    selection_stats,
    threshold_label,
)
from .extractive import (
    ExtractiveParams,
    RankVector,
    SentenceGraph,
    build_lexrank_graph,
    build_textrank_graph,
    lexrank_summary,
    power_iterate,
    textrank_summary,
)
from .models import HybridResult, SummaryCandidate
from .preprocess import (
    PreprocessConfig,
    PreprocessedDoc,
    Sentence,
    clean_text,
    normalize,
    preprocess_post,
    remove_stopwords,
    split_sentences,
    tokenize,
)
from .selector import SelectorConfig, pick_best, summarize_hybrid
from .similarity import (
    SimilarityScore,
    SynonymLexicon,
    combined_similarity,
    cosine_similarity,
    semantic_similarity,
    term_vector,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractiveRequest",
    "BackendSpec",
    "ConfusionMatrix",
    "Corpus",
    "ExtractiveParams",
    "HybridResult",
    "LabelRecord",
    "MetricsReport",
    "Post",
    "PreprocessConfig",
    "PreprocessedDoc",
    "RANKING_BACKEND",
    "RankVector",
    "ReferenceSet",
    "SelectorConfig",
    "Sentence",
    "SentenceGraph",
    "SimilarityScore",
    "SummaryCandidate",
    "SynonymLexicon",
    "build_lexrank_graph",
    "build_textrank_graph",
    "clean_text",
    "combined_similarity",
    "confusion",
    "cosine_similarity",
    "deduplicate",
    "filter_by_hashtag",
    "lexrank_summary",
    "load_corpus",
    "load_references",
    "metrics",
    "normalize",
    "pick_best",
    "power_iterate",
    "preprocess_post",
    "remove_stopwords",
    "selection_stats",
    "semantic_similarity",
    "split_sentences",
    "summarize_hybrid",
    "summarize_remote",
    "summarize_stub",
    "term_vector",
    "textrank_summary",
    "threshold_label",
    "tokenize",
    "write_results",
]
