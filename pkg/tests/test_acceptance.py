"""Acceptance gate: one test per release criterion, one printed line each.

Run with plain pytest; the pass/fail lines bypass output capture so they
always show:

    pytest tests/test_acceptance.py
"""

from __future__ import annotations

import itertools
import random
import shutil
import subprocess
import sys
import time

import numpy as np
import pytest

from hybridsum import corpus_io
from hybridsum.abstractive import BackendSpec
from hybridsum.evaluation import ConfusionMatrix, metrics, threshold_label
from hybridsum.extractive import (
    ExtractiveParams,
    SentenceGraph,
    lexrank_summary,
    power_iterate,
    textrank_summary,
)
from hybridsum.models import HybridResult, SummaryCandidate
from hybridsum.preprocess import (
    PreprocessConfig,
    chain_text,
    clean_text,
    normalize,
    preprocess_post,
)
from hybridsum.selector import summarize_hybrid
from hybridsum.similarity import score_tokens, semantic_similarity
from hybridsum.stub_backend import StubBackendServer

from test_extractive import oracle_stationary, random_symmetric_graph
from test_similarity import brute_force_jaccard

TIGHT = ExtractiveParams(epsilon=1e-10, max_iter=10000)


@pytest.fixture
def announce(capsys):
    """Run a criterion body and print a visible [PASS]/[FAIL] line."""

    def check(name, body):
        try:
            body()
        except BaseException:
            with capsys.disabled():
                print(f"[FAIL] {name}")
            raise
        with capsys.disabled():
            print(f"[PASS] {name}")

    return check


def all_fixture_posts(fixtures_dir):
    posts = []
    for name in ("corpus_tiny.csv", "corpus_100.csv", "corpus_886.csv"):
        posts.extend(corpus_io.load_corpus(fixtures_dir / name).posts)
    return posts


def test_metric_identity(announce):
    def body():
        started = time.monotonic()
        report = metrics(ConfusionMatrix(tp=437, fp=109, fn=96, tn=178))
        assert abs(report.accuracy - 0.750) <= 0.001
        assert abs(report.precision - 0.800) <= 0.001
        assert abs(report.recall - 0.820) <= 0.001
        assert abs(report.f_measure - 0.810) <= 0.001
        assert abs(report.error_rate - 0.250) <= 0.001
        assert time.monotonic() - started < 1.0

    announce("metric identity on the rate-consistent 820-post matrix", body)


def test_power_iteration_oracle_equivalence(announce):
    def body():
        started = time.monotonic()
        rng = random.Random(200820)
        for index in range(200):
            n = rng.randint(1, 8)
            weights = random_symmetric_graph(rng, n)
            expected = oracle_stationary(weights)
            got = power_iterate(SentenceGraph(weights=weights), TIGHT).scores
            worst = np.abs(np.asarray(got) - expected).max()
            assert worst < 1e-6, f"graph {index}: deviation {worst}"
        assert time.monotonic() - started < 10.0

    announce("power iteration matches the dense oracle on 200 random graphs", body)


def test_extractive_verbatim_property(announce, fixtures_dir, pre_config):
    def body():
        corpus = corpus_io.load_corpus(fixtures_dir / "corpus_100.csv")
        assert corpus.stats.row_count == 100
        for k in (1, 2):
            params = ExtractiveParams(k=k)
            for post in corpus.posts:
                doc = preprocess_post(post, pre_config)
                sentence_texts = [s.text for s in doc.sentences]
                allowed = {
                    " ".join(combo)
                    for size in range(1, k + 1)
                    for combo in itertools.combinations(sentence_texts, size)
                }
                for summary in (textrank_summary(doc, params), lexrank_summary(doc, params)):
                    assert summary.text in allowed, (post.id, summary.source, summary.text)

    announce("extractive summaries are in-order concatenations of original sentences", body)


def test_preprocessing_monotonicity_idempotence_and_dedup(announce, fixtures_dir):
    def body():
        config = PreprocessConfig()
        for post in all_fixture_posts(fixtures_dir):
            raw = post.raw_text
            cleaned = clean_text(raw, config.blacklist)
            normalized = normalize(cleaned)
            assert len(cleaned) <= len(raw)
            assert len(normalized) <= len(cleaned)
            once = chain_text(raw, config)
            assert chain_text(once, config) == once
        corpus = corpus_io.load_corpus(fixtures_dir / "corpus_886.csv")
        assert corpus.stats.row_count == 886
        assert corpus_io.deduplicate(corpus).stats.row_count == 820

    announce("preprocessing is monotone and idempotent; 886-row fixture dedups to 820", body)


def test_similarity_properties(announce):
    def body():
        rng = random.Random(51000)
        universe = [f"term{i}" for i in range(20)]

        def random_tokens(allow_empty=True):
            low = 0 if allow_empty else 1
            return [rng.choice(universe) for _ in range(rng.randint(low, 10))]

        for _ in range(1000):
            a, b = random_tokens(), random_tokens()
            forward = score_tokens(a, b)
            backward = score_tokens(b, a)
            assert forward == backward
            for value in (forward.cosine, forward.semantic, forward.combined):
                assert 0.0 <= value <= 1.0
            assert abs(forward.combined - (0.5 * forward.semantic + 0.5 * forward.cosine)) < 1e-12
            same = random_tokens(allow_empty=False)
            own = score_tokens(same, list(same))
            assert own.cosine == own.semantic == own.combined == 1.0
        for _ in range(500):
            a = set(rng.sample(universe, rng.randint(0, 6)))
            b = set(rng.sample(universe, rng.randint(0, 6)))
            assert semantic_similarity(a, b) == pytest.approx(brute_force_jaccard(a, b))

    announce("similarity symmetry, range, self-identity, weighting, Jaccard oracle", body)


def test_selector_branch_dominance_and_threshold_boundary(announce, make_doc, stub_server):
    def body():
        rng = random.Random(99)
        vocab = [f"word{i}" for i in range(12)]

        # extractive dominance: the closing sentence carries the whole
        # vocabulary, while the stub backend only returns the lead sentence
        for _ in range(20):
            words = rng.sample(vocab, 9)
            lead, middle, extra = words[:3], words[3:6], words[6:9]
            union = sorted(lead + middle + extra)
            text = f"{' '.join(lead)}. {' '.join(middle)}. {' '.join(union)}."
            result = summarize_hybrid(make_doc(text), text)
            assert result.final_branch == "extractive", text
            assert result.final.text == " ".join(union) + "."

        # abstractive dominance: an echoing backend reproduces the whole
        # post, which no single extracted sentence can match
        echo = stub_server(mode="echo")
        backends = [BackendSpec(name="t5", endpoint=echo.url, timeout_ms=5000, max_summary_words=100)]
        for _ in range(20):
            words = rng.sample(vocab, 12)
            text = ". ".join(" ".join(words[i : i + 4]) for i in (0, 4, 8)) + "."
            result = summarize_hybrid(make_doc(text), text, backends=backends)
            assert result.final_branch == "abstractive", text
            assert result.abstractive_choice.score.combined == 1.0

        # inclusive boundary: expanded-set overlap of exactly 4/5 under
        # alpha=1 puts the combined score precisely at 0.80
        candidate = SummaryCandidate.make("alpha beta gamma delta", "textrank")
        result = HybridResult(
            post_id="b1",
            extractive_choice=candidate,
            abstractive_choice=None,
            final=candidate,
            final_branch="extractive",
        )
        record = threshold_label(
            result, "alpha beta gamma delta epsilon", threshold=0.80, alpha=1.0
        )
        assert record.label == "P"

    announce("hybrid selection follows the dominant branch; threshold 0.80 is inclusive", body)


def write_config(path, corpus, refs, fixtures_dir, extra=""):
    body = f"""
input = "{corpus}"
references = "{refs}"
stopwords = "{fixtures_dir}/stopwords_en.txt"
lexicon = "{fixtures_dir}/lexicon.tsv"
abbreviations = "{fixtures_dir}/abbreviations.txt"
output = "run"
{extra}
"""
    path.write_text(body, encoding="utf-8")
    return path


def summarize_cli(*args):
    """Invoke the installed console script (module fallback if not on PATH)."""
    executable = shutil.which("summarize")
    command = [executable] if executable else [sys.executable, "-m", "hybridsum.cli"]
    return subprocess.run(
        [*command, *args], capture_output=True, text=True, timeout=120
    )


def test_end_to_end_determinism(announce, tmp_path, fixtures_dir):
    def body():
        started = time.monotonic()
        config_path = write_config(
            tmp_path / "config.toml",
            fixtures_dir / "corpus_100.csv",
            fixtures_dir / "references_100.csv",
            fixtures_dir,
        )
        for run_dir in ("run_a", "run_b"):
            proc = summarize_cli("run", "--config", str(config_path), "--output", run_dir)
            assert proc.returncode == 0, proc.stderr
        for name in ("results.jsonl", "labels.csv", "metrics.json"):
            first = (tmp_path / "run_a" / name).read_bytes()
            second = (tmp_path / "run_b" / name).read_bytes()
            assert first == second, f"{name} differs between runs"
        assert len((tmp_path / "run_a" / "results.jsonl").read_bytes().splitlines()) == 100
        assert time.monotonic() - started < 30.0

    announce("two stub-backend runs write byte-identical artifacts", body)


def test_backend_failure_resilience(announce, tmp_path, fixtures_dir):
    def body():
        # 10-post slice of the synthetic corpus, references included
        corpus_lines = (fixtures_dir / "corpus_100.csv").read_text(encoding="utf-8").splitlines()
        refs_lines = (fixtures_dir / "references_100.csv").read_text(encoding="utf-8").splitlines()
        corpus_path = tmp_path / "corpus_10.csv"
        refs_path = tmp_path / "references_10.csv"
        corpus_path.write_text("\n".join(corpus_lines[:11]) + "\n", encoding="utf-8")
        refs_path.write_text("\n".join(refs_lines[:11]) + "\n", encoding="utf-8")

        with StubBackendServer(mode="lead", delay_ms=400) as slow:
            backends = f"""
[[backends]]
name = "t5"
endpoint = "{slow.url}"
timeout_ms = 100
retries = 1
backoff_ms = 50

[[backends]]
name = "bart-large-cnn"
endpoint = "{slow.url}"
timeout_ms = 100
retries = 1
backoff_ms = 50
"""
            config_path = write_config(
                tmp_path / "config.toml", corpus_path, refs_path, fixtures_dir, extra=backends
            )
            proc = summarize_cli("run", "--config", str(config_path))
            assert proc.returncode == 0, proc.stderr

        results = corpus_io.load_results(tmp_path / "run" / "results.jsonl")
        assert len(results) == 10
        for result in results:
            assert "abstractive-fallback" in result.flags
            assert result.final_branch == "extractive"
            assert result.abstractive_choice is None

    announce("run survives total backend timeouts and flags every fallback", body)
