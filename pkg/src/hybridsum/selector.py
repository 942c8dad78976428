"""Two-level candidate selection.

Level one picks the best summary inside each branch (textrank vs
lexrank; one abstractive backend vs another), level two picks between
the branch winners.  Both levels use the same rule: highest combined
similarity to the source text wins; candidates within the tie window
fall back to fewer words, then to source name.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import abstractive, extractive
from .errors import BackendError, DegenerateInputError, PipelineError
from .models import (
    ABSTRACTIVE_BRANCH,
    EXTRACTIVE_BRANCH,
    FLAG_ABSTRACTIVE_FALLBACK,
    FLAG_EXTRACTIVE_FALLBACK,
    HybridResult,
    SummaryCandidate,
)
from .preprocess import PreprocessConfig, PreprocessedDoc, chain_tokens
from .similarity import SynonymLexicon, score_tokens


@dataclass(frozen=True)
class SelectorConfig:
    alpha: float = 0.5
    tie_epsilon: float = 0.01

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.tie_epsilon < 0.0:
            raise ValueError("tie_epsilon must be non-negative")


def pick_best(
    candidates: list[SummaryCandidate],
    source_text: str,
    cfg: SelectorConfig | None = None,
    lexicon: SynonymLexicon | None = None,
    config: PreprocessConfig | None = None,
) -> SummaryCandidate:
    """Score every candidate against the source text and pick the winner.

    Returns one of the inputs, with its score filled in.
    """
    if not candidates:
        raise ValueError("pick_best needs at least one candidate")
    if not source_text.strip():
        raise ValueError("source_text must be nonempty")
    cfg = cfg or SelectorConfig()
    source_tokens = chain_tokens(source_text, config)
    scored = [
        replace(
            c,
            score=score_tokens(chain_tokens(c.text, config), source_tokens, cfg.alpha, lexicon),
        )
        for c in candidates
    ]
    best = max(c.score.combined for c in scored)
    tied = [c for c in scored if best - c.score.combined <= cfg.tie_epsilon]
    return min(tied, key=lambda c: (c.word_count, c.source))


def summarize_hybrid(
    doc: PreprocessedDoc,
    raw_text: str,
    cfg: SelectorConfig | None = None,
    params: extractive.ExtractiveParams | None = None,
    backends: list[abstractive.BackendSpec] | None = None,
    lexicon: SynonymLexicon | None = None,
    config: PreprocessConfig | None = None,
    max_workers: int = abstractive.DEFAULT_MAX_WORKERS,
) -> HybridResult:
    """Produce both branch winners and select the final summary.

    A branch whose every candidate failed drops out; the result is then
    the surviving branch's winner, flagged.  Both branches failing is a
    per-post pipeline error.
    """
    cfg = cfg or SelectorConfig()
    params = params or extractive.ExtractiveParams()
    backends = backends if backends is not None else [
        abstractive.BackendSpec(name=abstractive.STUB_BACKEND_NAME, endpoint=abstractive.STUB_ENDPOINT)
    ]
    flags: list[str] = []

    extractive_choice: SummaryCandidate | None = None
    try:
        branch = [extractive.textrank_summary(doc, params), extractive.lexrank_summary(doc, params)]
        extractive_choice = pick_best(branch, raw_text, cfg, lexicon, config)
    except DegenerateInputError as exc:
        flags.append(f"extractive-failed:{exc}")

    abstractive_choice: SummaryCandidate | None = None
    outcomes = abstractive.summarize_all(backends, raw_text, max_workers=max_workers)
    survivors = []
    for spec, outcome in zip(backends, outcomes):
        if isinstance(outcome, BackendError):
            flags.append(f"backend-failed:{spec.name}")
        else:
            survivors.append(outcome)
    if survivors:
        abstractive_choice = pick_best(survivors, raw_text, cfg, lexicon, config)

    if extractive_choice is None and abstractive_choice is None:
        raise PipelineError(f"post {doc.post_id!r}: both branches failed")
    if abstractive_choice is None:
        flags.append(FLAG_ABSTRACTIVE_FALLBACK)
        final, final_branch = extractive_choice, EXTRACTIVE_BRANCH
    elif extractive_choice is None:
        flags.append(FLAG_EXTRACTIVE_FALLBACK)
        final, final_branch = abstractive_choice, ABSTRACTIVE_BRANCH
    else:
        final = pick_best([extractive_choice, abstractive_choice], raw_text, cfg, lexicon, config)
        final_branch = (
            EXTRACTIVE_BRANCH if final.source == extractive_choice.source else ABSTRACTIVE_BRANCH
        )
    return HybridResult(
        post_id=doc.post_id,
        extractive_choice=extractive_choice,
        abstractive_choice=abstractive_choice,
        final=final,
        final_branch=final_branch,
        flags=tuple(flags),
    )
