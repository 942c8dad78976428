"""Threshold labeling, confusion matrix, metrics, selection stats."""

from __future__ import annotations

import pytest

from hybridsum.errors import JoinError, MissingReferenceError
from hybridsum.evaluation import (
    ConfusionMatrix,
    LabelRecord,
    confusion,
    empty_metrics_report,
    label_join_metrics,
    majority_gold,
    metrics,
    selection_stats,
    threshold_label,
)
from hybridsum.models import HybridResult, SummaryCandidate
from hybridsum.similarity import SimilarityScore


def result_with_summary(text, post_id="p1", branch="extractive", combined=None):
    score = None
    if combined is not None:
        score = SimilarityScore(cosine=combined, semantic=combined, combined=combined, alpha=0.5)
    candidate = SummaryCandidate(text=text, source="textrank", word_count=len(text.split()), score=score)
    return HybridResult(
        post_id=post_id,
        extractive_choice=candidate,
        abstractive_choice=None,
        final=candidate,
        final_branch=branch,
        flags=(),
    )


def gold(pairs):
    return [LabelRecord(post_id=i, label=l, origin="human", annotator="a") for i, l in pairs]


def predicted(pairs):
    return [LabelRecord(post_id=i, label=l, origin="threshold") for i, l in pairs]


class TestThresholdLabel:
    def test_above_threshold_is_p(self):
        result = result_with_summary("golden sunset harbor")
        record = threshold_label(result, "golden sunset harbor", threshold=0.80)
        assert record.label == "P"
        assert record.origin == "threshold"

    def test_below_threshold_is_n(self):
        result = result_with_summary("completely different words")
        record = threshold_label(result, "golden sunset harbor", threshold=0.80)
        assert record.label == "N"

    def test_exact_boundary_inclusive(self):
        # identical texts give combined exactly 1.0; threshold 1.0 is inclusive
        result = result_with_summary("golden sunset")
        assert threshold_label(result, "golden sunset", threshold=1.0).label == "P"

    def test_monotone_in_threshold(self):
        result = result_with_summary("golden sunset harbor quiet")
        reference = "golden sunset harbor"
        labels = [
            threshold_label(result, reference, threshold=t).label
            for t in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)
        ]
        # once N, never back to P as the threshold rises
        assert "".join(labels) == "P" * labels.count("P") + "N" * labels.count("N")

    def test_missing_reference(self):
        result = result_with_summary("anything")
        with pytest.raises(MissingReferenceError):
            threshold_label(result, None)
        with pytest.raises(MissingReferenceError):
            threshold_label(result, "   ")

    def test_bad_threshold(self):
        result = result_with_summary("anything")
        with pytest.raises(ValueError):
            threshold_label(result, "ref", threshold=1.5)


class TestConfusion:
    def test_mixed_counts(self):
        cm = confusion(
            gold([("a", "P"), ("b", "N"), ("c", "N"), ("d", "P")]),
            predicted([("a", "P"), ("b", "P"), ("c", "N"), ("d", "N")]),
        )
        assert (cm.tp, cm.fp, cm.tn, cm.fn) == (1, 1, 1, 1)

    def test_perfect_agreement(self):
        pairs = [(f"p{i}", "P") for i in range(5)]
        cm = confusion(gold(pairs), predicted(pairs))
        assert (cm.tp, cm.fp, cm.tn, cm.fn) == (5, 0, 0, 0)

    def test_empty(self):
        cm = confusion([], [])
        assert cm.total == 0

    def test_id_mismatch(self):
        with pytest.raises(JoinError) as err:
            confusion(gold([("a", "P")]), predicted([("b", "P")]))
        assert "a" in str(err.value) and "b" in str(err.value)

    def test_duplicate_ids_rejected(self):
        with pytest.raises(JoinError):
            confusion(gold([("a", "P"), ("a", "N")]), predicted([("a", "P"), ("x", "N")]))

    def test_swapping_sides_transposes_fp_fn(self):
        g = gold([("a", "P"), ("b", "N"), ("c", "P"), ("d", "N")])
        p = predicted([("a", "N"), ("b", "P"), ("c", "P"), ("d", "N")])
        forward = confusion(g, p)
        backward = confusion(
            [LabelRecord(r.post_id, r.label, "human", "a") for r in p],
            [LabelRecord(r.post_id, r.label, "threshold") for r in g],
        )
        assert (forward.tp, forward.tn) == (backward.tp, backward.tn)
        assert forward.fp == backward.fn
        assert forward.fn == backward.fp

    def test_counts_sum_to_join_size(self):
        g = gold([("a", "P"), ("b", "N"), ("c", "P")])
        p = predicted([("a", "N"), ("b", "N"), ("c", "P")])
        assert confusion(g, p).total == 3


class TestMetrics:
    def test_rate_consistent_matrix(self):
        report = metrics(ConfusionMatrix(tp=437, fp=109, fn=96, tn=178))
        assert report.accuracy == pytest.approx(0.750, abs=1e-3)
        assert report.precision == pytest.approx(0.800, abs=1e-3)
        assert report.recall == pytest.approx(0.820, abs=1e-3)
        assert report.f_measure == pytest.approx(0.810, abs=1e-3)
        assert report.error_rate == pytest.approx(0.250, abs=1e-3)
        assert report.flags == ()

    def test_perfect_classifier(self):
        report = metrics(ConfusionMatrix(tp=1, fp=0, tn=1, fn=0))
        assert report.accuracy == report.precision == report.recall == 1.0

    def test_degenerate_all_tn(self):
        report = metrics(ConfusionMatrix(tp=0, fp=0, tn=7, fn=0))
        assert report.precision == 0.0
        assert report.recall == 0.0
        assert "precision-zero-denominator" in report.flags
        assert "recall-zero-denominator" in report.flags

    def test_empty_matrix_rejected(self):
        with pytest.raises(ValueError):
            metrics(ConfusionMatrix())

    def test_identities(self):
        report = metrics(ConfusionMatrix(tp=10, fp=3, tn=5, fn=2))
        assert abs(report.error_rate - (1.0 - report.accuracy)) < 1e-12
        expected_f = 2 * report.precision * report.recall / (report.precision + report.recall)
        assert abs(report.f_measure - expected_f) < 1e-9


class TestSelectionStats:
    def test_counts(self):
        results = [
            result_with_summary("a", "p1", branch="extractive", combined=0.8),
            result_with_summary("b", "p2", branch="abstractive", combined=0.6),
            result_with_summary("c", "p3", branch="extractive", combined=0.4),
        ]
        stats = selection_stats(results)
        assert stats.extractive_count == 2
        assert stats.abstractive_count == 1
        assert stats.mean_similarity_by_branch["extractive"] == pytest.approx(0.6)
        assert stats.mean_similarity_by_branch["abstractive"] == pytest.approx(0.6)

    def test_empty(self):
        stats = selection_stats([])
        assert stats.extractive_count == 0
        assert stats.abstractive_count == 0

    def test_all_extractive(self):
        results = [result_with_summary("x", f"p{i}", combined=0.5) for i in range(3)]
        assert selection_stats(results).abstractive_count == 0


class TestMajorityGold:
    def test_majority_wins(self):
        records = [
            LabelRecord("a", "P", "human", "u1"),
            LabelRecord("a", "P", "human", "u2"),
            LabelRecord("a", "N", "human", "u3"),
        ]
        assert majority_gold(records) == {"a": "P"}

    def test_tie_goes_to_n(self):
        records = [
            LabelRecord("a", "P", "human", "u1"),
            LabelRecord("a", "N", "human", "u2"),
        ]
        assert majority_gold(records) == {"a": "N"}

    def test_last_write_wins_per_annotator(self):
        records = [
            LabelRecord("a", "N", "human", "u1"),
            LabelRecord("a", "P", "human", "u1"),
        ]
        assert majority_gold(records) == {"a": "P"}

    def test_threshold_records_ignored(self):
        records = [LabelRecord("a", "P", "threshold")]
        assert majority_gold(records) == {}


class TestLabelJoinMetrics:
    def test_no_human_labels_gives_empty_report(self):
        report, cm = label_join_metrics(predicted([("a", "P")]))
        assert report == empty_metrics_report()
        assert cm.total == 0

    def test_join_over_intersection(self):
        records = predicted([("a", "P"), ("b", "N")]) + [
            LabelRecord("a", "P", "human", "u1"),
            LabelRecord("zzz", "P", "human", "u1"),  # no threshold row: left out
        ]
        report, cm = label_join_metrics(records)
        assert cm.total == 1
        assert cm.tp == 1
        assert report.accuracy == 1.0
