"""Threshold labeling against references, confusion matrix, and metrics.

A produced summary is predicted P when its combined similarity to the
reference reaches the threshold (inclusive), else N.  Gold P/N labels
come from human review; the confusion matrix joins both label sets by
post id.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

from .errors import JoinError, MissingReferenceError
from .models import ABSTRACTIVE_BRANCH, EXTRACTIVE_BRANCH, HybridResult
from .similarity import PreprocessConfig, SynonymLexicon, combined_similarity

DEFAULT_THRESHOLD = 0.80

ORIGIN_HUMAN = "human"
ORIGIN_THRESHOLD = "threshold"

FLAG_PRECISION_UNDEFINED = "precision-zero-denominator"
FLAG_RECALL_UNDEFINED = "recall-zero-denominator"
FLAG_F_UNDEFINED = "f-measure-zero-denominator"
FLAG_NO_LABELS = "no-labels"


@dataclass(frozen=True)
class LabelRecord:
    post_id: str
    label: str  # "P" or "N"
    origin: str  # "human" or "threshold"
    annotator: str = ""
    timestamp: str = ""  # RFC 3339; empty for deterministic threshold rows


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass(frozen=True)
class MetricsReport:
    accuracy: float
    precision: float
    recall: float
    f_measure: float
    error_rate: float
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class SelectionStats:
    extractive_count: int
    abstractive_count: int
    mean_similarity_by_branch: dict[str, float]


def threshold_label(
    result: HybridResult,
    reference: str | None,
    threshold: float = DEFAULT_THRESHOLD,
    alpha: float = 0.5,
    lexicon: SynonymLexicon | None = None,
    config: PreprocessConfig | None = None,
) -> LabelRecord:
    """P when combined similarity to the reference is >= threshold."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    if not reference or not reference.strip():
        raise MissingReferenceError(f"no reference summary for post {result.post_id!r}")
    score = combined_similarity(result.final.text, reference, alpha, lexicon, config)
    label = "P" if score.combined >= threshold else "N"
    return LabelRecord(post_id=result.post_id, label=label, origin=ORIGIN_THRESHOLD)


def confusion(gold: list[LabelRecord], predicted: list[LabelRecord]) -> ConfusionMatrix:
    """Counts over the id join; both sides must cover the same ids once."""
    gold_map = _unique_by_id(gold, "gold")
    pred_map = _unique_by_id(predicted, "predicted")
    mismatch = set(gold_map) ^ set(pred_map)
    if mismatch:
        raise JoinError("gold and predicted ids do not match", sorted(mismatch))
    tp = fp = tn = fn = 0
    for post_id, gold_label in gold_map.items():
        pred_label = pred_map[post_id]
        if gold_label == "P" and pred_label == "P":
            tp += 1
        elif gold_label == "N" and pred_label == "P":
            fp += 1
        elif gold_label == "P" and pred_label == "N":
            fn += 1
        else:
            tn += 1
    return ConfusionMatrix(tp=tp, fp=fp, tn=tn, fn=fn)


def _unique_by_id(records: list[LabelRecord], side: str) -> dict[str, str]:
    counts = Counter(r.post_id for r in records)
    duplicated = [post_id for post_id, n in counts.items() if n > 1]
    if duplicated:
        raise JoinError(f"duplicate {side} labels", duplicated)
    return {r.post_id: r.label for r in records}


def metrics(cm: ConfusionMatrix) -> MetricsReport:
    """Accuracy, precision, recall, F-measure and error rate from counts.

    Zero-denominator metrics come back as 0.0 with a flag instead of
    failing the whole report.
    """
    if cm.total == 0:
        raise ValueError("cannot compute metrics over an empty confusion matrix")
    flags: list[str] = []
    accuracy = (cm.tp + cm.tn) / cm.total
    if cm.tp + cm.fp > 0:
        precision = cm.tp / (cm.tp + cm.fp)
    else:
        precision = 0.0
        flags.append(FLAG_PRECISION_UNDEFINED)
    if cm.tp + cm.fn > 0:
        recall = cm.tp / (cm.tp + cm.fn)
    else:
        recall = 0.0
        flags.append(FLAG_RECALL_UNDEFINED)
    if precision + recall > 0:
        f_measure = 2.0 * precision * recall / (precision + recall)
    else:
        f_measure = 0.0
        flags.append(FLAG_F_UNDEFINED)
    return MetricsReport(
        accuracy=accuracy,
        precision=precision,
        recall=recall,
        f_measure=f_measure,
        error_rate=1.0 - accuracy,
        flags=tuple(flags),
    )


def empty_metrics_report() -> MetricsReport:
    """The report emitted before any gold labels exist."""
    return MetricsReport(
        accuracy=0.0,
        precision=0.0,
        recall=0.0,
        f_measure=0.0,
        error_rate=0.0,
        flags=(FLAG_NO_LABELS,),
    )


def selection_stats(results: list[HybridResult]) -> SelectionStats:
    """Final-branch counts and mean combined similarity per branch."""
    counts = {EXTRACTIVE_BRANCH: 0, ABSTRACTIVE_BRANCH: 0}
    sums = {EXTRACTIVE_BRANCH: 0.0, ABSTRACTIVE_BRANCH: 0.0}
    for result in results:
        counts[result.final_branch] += 1
        if result.final.score is not None:
            sums[result.final_branch] += result.final.score.combined
    means = {
        branch: (sums[branch] / counts[branch] if counts[branch] else 0.0)
        for branch in (EXTRACTIVE_BRANCH, ABSTRACTIVE_BRANCH)
    }
    return SelectionStats(
        extractive_count=counts[EXTRACTIVE_BRANCH],
        abstractive_count=counts[ABSTRACTIVE_BRANCH],
        mean_similarity_by_branch=means,
    )


def label_join_metrics(
    records: list[LabelRecord], tie_label: str = "N"
) -> tuple[MetricsReport, ConfusionMatrix]:
    """Metrics over the current label file state.

    Gold is the majority vote of human labels; predicted is the threshold
    label.  Posts present on only one side are left out of the join.
    Before any human label exists this returns the empty report.
    """
    gold_map = majority_gold(records, tie_label)
    predicted_map = {r.post_id: r.label for r in records if r.origin == ORIGIN_THRESHOLD}
    ids = sorted(set(gold_map) & set(predicted_map))
    if not ids:
        return empty_metrics_report(), ConfusionMatrix()
    gold = [LabelRecord(post_id=i, label=gold_map[i], origin=ORIGIN_HUMAN) for i in ids]
    predicted = [
        LabelRecord(post_id=i, label=predicted_map[i], origin=ORIGIN_THRESHOLD) for i in ids
    ]
    cm = confusion(gold, predicted)
    return metrics(cm), cm


def majority_gold(records: list[LabelRecord], tie_label: str = "N") -> dict[str, str]:
    """Majority vote over human labels, one vote per annotator (last wins).

    Ties fall to ``tie_label``.
    """
    latest: dict[str, dict[str, str]] = defaultdict(dict)
    for record in records:
        if record.origin == ORIGIN_HUMAN:
            latest[record.post_id][record.annotator] = record.label
    gold = {}
    for post_id, votes in latest.items():
        p_votes = sum(1 for label in votes.values() if label == "P")
        n_votes = len(votes) - p_votes
        if p_votes > n_votes:
            gold[post_id] = "P"
        elif n_votes > p_votes:
            gold[post_id] = "N"
        else:
            gold[post_id] = tie_label
    return gold
