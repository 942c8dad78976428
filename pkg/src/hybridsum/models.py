"""Result records shared by the summarization, selection, and I/O layers."""

from __future__ import annotations

from dataclasses import dataclass

from .similarity import SimilarityScore

EXTRACTIVE_BRANCH = "extractive"
ABSTRACTIVE_BRANCH = "abstractive"

FLAG_ABSTRACTIVE_FALLBACK = "abstractive-fallback"
FLAG_EXTRACTIVE_FALLBACK = "extractive-fallback"


@dataclass(frozen=True)
class SummaryCandidate:
    """A produced summary; score is filled once selection compares it."""

    text: str
    source: str
    word_count: int
    score: SimilarityScore | None = None

    @classmethod
    def make(cls, text: str, source: str) -> "SummaryCandidate":
        return cls(text=text, source=source, word_count=len(text.split()))


@dataclass(frozen=True)
class HybridResult:
    """Outcome of the two-level selection for one post."""

    post_id: str
    extractive_choice: SummaryCandidate | None
    abstractive_choice: SummaryCandidate | None
    final: SummaryCandidate
    final_branch: str
    flags: tuple[str, ...] = ()
