"""Cosine, synonym-expanded semantic, and combined similarity scores.

The combined score is the weighted mean used everywhere a summary is
compared against a text: candidate selection and threshold labeling.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .preprocess import PreprocessConfig, Token, chain_tokens

TermVector = dict[str, int]

DEFAULT_ALPHA = 0.5


@dataclass(frozen=True)
class SynonymLexicon:
    """Synonym groups; a term may belong to several groups."""

    groups: tuple[frozenset[str], ...] = ()

    def expand(self, terms: Iterable[str]) -> set[str]:
        """The terms plus every co-member of any group a term belongs to."""
        expanded = set(terms)
        for group in self.groups:
            if expanded & group:
                expanded |= group
        return expanded

    @classmethod
    def load(cls, path: str | Path) -> "SynonymLexicon":
        """One tab-separated synonym group per line; '#' lines are comments."""
        groups = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                terms = frozenset(t.strip().lower() for t in line.split("\t") if t.strip())
                if terms:
                    groups.append(terms)
        return cls(groups=tuple(groups))


@dataclass(frozen=True)
class SimilarityScore:
    cosine: float
    semantic: float
    combined: float
    alpha: float


def term_vector(tokens: Iterable[Token]) -> TermVector:
    return dict(Counter(tokens))


def cosine_similarity(a: Mapping[str, float], b: Mapping[str, float]) -> float:
    """dot(a, b) / (|a| * |b|), 0.0 when either vector is empty or zero."""
    if not a or not b:
        return 0.0
    if a == b:
        return 1.0  # exact self-similarity, no sqrt round-off
    # summation over sorted terms keeps the result exactly symmetric
    dot = sum(a[term] * b[term] for term in sorted(a.keys() & b.keys()))
    norm_a = _norm(a)
    norm_b = _norm(b)
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return min(1.0, max(0.0, dot / (norm_a * norm_b)))


def _norm(vector: Mapping[str, float]) -> float:
    return math.sqrt(sum(vector[term] ** 2 for term in sorted(vector)))


def semantic_similarity(
    a: Iterable[str], b: Iterable[str], lexicon: SynonymLexicon | None = None
) -> float:
    """Jaccard index of the synonym-expanded term sets."""
    set_a, set_b = set(a), set(b)
    if not set_a and not set_b:
        return 1.0
    if not set_a or not set_b:
        return 0.0
    lexicon = lexicon or SynonymLexicon()
    expanded_a = lexicon.expand(set_a)
    expanded_b = lexicon.expand(set_b)
    return len(expanded_a & expanded_b) / len(expanded_a | expanded_b)


def score_tokens(
    tokens_a: Iterable[Token],
    tokens_b: Iterable[Token],
    alpha: float = DEFAULT_ALPHA,
    lexicon: SynonymLexicon | None = None,
) -> SimilarityScore:
    """All three similarity components over pre-tokenized inputs."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    tokens_a, tokens_b = list(tokens_a), list(tokens_b)
    cosine = cosine_similarity(term_vector(tokens_a), term_vector(tokens_b))
    semantic = semantic_similarity(tokens_a, tokens_b, lexicon)
    combined = alpha * semantic + (1.0 - alpha) * cosine
    return SimilarityScore(cosine=cosine, semantic=semantic, combined=combined, alpha=alpha)


def combined_similarity(
    text_a: str,
    text_b: str,
    alpha: float = DEFAULT_ALPHA,
    lexicon: SynonymLexicon | None = None,
    config: PreprocessConfig | None = None,
) -> SimilarityScore:
    """Similarity of two raw texts after the preprocessing chain."""
    return score_tokens(
        chain_tokens(text_a, config), chain_tokens(text_b, config), alpha, lexicon
    )
