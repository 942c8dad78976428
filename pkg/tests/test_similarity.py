"""Cosine, semantic, and combined similarity scores."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hybridsum.similarity import (
    SimilarityScore,
    SynonymLexicon,
    combined_similarity,
    cosine_similarity,
    semantic_similarity,
    score_tokens,
    term_vector,
)

TOKENS = st.lists(st.sampled_from("abcdefghij"), max_size=12)


def brute_force_jaccard(a: set, b: set) -> float:
    """Independent set-arithmetic oracle."""
    if not a and not b:
        return 1.0
    union = len(a) + len(b) - len(a & b)
    if union == 0:
        return 0.0
    return len(a & b) / union


class TestTermVector:
    def test_counts(self):
        assert term_vector(["a", "b", "a"]) == {"a": 2, "b": 1}

    def test_empty(self):
        assert term_vector([]) == {}

    def test_singleton(self):
        assert term_vector(["x"]) == {"x": 1}


class TestCosine:
    def test_identical(self):
        v = term_vector(["a", "b", "b"])
        assert cosine_similarity(v, v) == pytest.approx(1.0)

    def test_disjoint(self):
        assert cosine_similarity({"a": 1}, {"b": 1}) == 0.0

    def test_half(self):
        # dot = 1, norms sqrt(2) * sqrt(2) = 2
        assert cosine_similarity({"a": 1, "b": 1}, {"a": 1, "c": 1}) == pytest.approx(0.5)

    def test_empty_vector(self):
        assert cosine_similarity({}, {"a": 1}) == 0.0
        assert cosine_similarity({}, {}) == 0.0

    @given(TOKENS, TOKENS)
    def test_symmetric_and_in_range(self, a, b):
        va, vb = term_vector(a), term_vector(b)
        left, right = cosine_similarity(va, vb), cosine_similarity(vb, va)
        assert left == right
        assert 0.0 <= left <= 1.0


class TestSemantic:
    def test_identical_sets(self):
        assert semantic_similarity({"a", "b"}, {"a", "b"}) == 1.0

    def test_synonym_expansion(self):
        lexicon = SynonymLexicon(groups=(frozenset({"car", "automobile"}),))
        assert semantic_similarity({"car"}, {"automobile"}, lexicon) == 1.0

    def test_disjoint_empty_lexicon(self):
        assert semantic_similarity({"a"}, {"b"}) == 0.0

    def test_both_empty(self):
        assert semantic_similarity(set(), set()) == 1.0

    def test_one_empty(self):
        assert semantic_similarity(set(), {"a"}) == 0.0

    def test_empty_lexicon_equals_brute_force_jaccard(self):
        rng = random.Random(7)
        universe = [f"w{i}" for i in range(12)]
        for _ in range(500):
            a = set(rng.sample(universe, rng.randint(0, 6)))
            b = set(rng.sample(universe, rng.randint(0, 6)))
            assert semantic_similarity(a, b) == pytest.approx(brute_force_jaccard(a, b))

    def test_term_in_multiple_groups(self):
        lexicon = SynonymLexicon(
            groups=(frozenset({"bank", "shore"}), frozenset({"bank", "vault"}))
        )
        # "bank" pulls in both groups on expansion
        assert lexicon.expand({"bank"}) == {"bank", "shore", "vault"}

    @given(TOKENS, TOKENS)
    def test_symmetric(self, a, b):
        lexicon = SynonymLexicon(groups=(frozenset({"a", "b"}), frozenset({"c", "d", "e"})))
        assert semantic_similarity(a, b, lexicon) == semantic_similarity(b, a, lexicon)


class TestLexiconFile:
    def test_load(self, lexicon):
        assert any("sunset" in group for group in lexicon.groups)
        assert semantic_similarity({"sunset"}, {"dusk"}, lexicon) == 1.0

    def test_comments_ignored(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("# header\ncar\tautomobile\n\n", encoding="utf-8")
        assert SynonymLexicon.load(path).groups == (frozenset({"car", "automobile"}),)


class TestCombined:
    def test_identity(self):
        score = combined_similarity("same text here", "same text here")
        assert score.cosine == score.semantic == score.combined == 1.0

    def test_weighted_mean(self):
        score = SimilarityScore(cosine=0.6, semantic=0.8, combined=0.7, alpha=0.5)
        assert score.combined == pytest.approx(0.5 * 0.8 + 0.5 * 0.6)

    def test_alpha_zero_is_cosine(self):
        score = combined_similarity("red green blue", "red yellow blue", alpha=0.0)
        assert score.combined == score.cosine

    def test_alpha_one_is_semantic(self):
        score = combined_similarity("red green blue", "red yellow blue", alpha=1.0)
        assert score.combined == score.semantic

    def test_alpha_out_of_range(self):
        with pytest.raises(ValueError):
            combined_similarity("a", "b", alpha=1.5)
        with pytest.raises(ValueError):
            combined_similarity("a", "b", alpha=-0.1)

    def test_preprocessing_applied(self):
        # case, blacklisted chars, and spacing do not matter
        assert combined_similarity("Hello @World!", "hello world").combined == 1.0

    @given(TOKENS, TOKENS, st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    def test_combined_identity_and_range(self, a, b, alpha):
        score = score_tokens(a, b, alpha=alpha)
        assert abs(score.combined - (alpha * score.semantic + (1 - alpha) * score.cosine)) < 1e-12
        assert 0.0 <= score.combined <= 1.0

    def test_monotone_in_components(self):
        low = SimilarityScore(cosine=0.2, semantic=0.4, combined=0.3, alpha=0.5)
        high = SimilarityScore(cosine=0.3, semantic=0.4, combined=0.35, alpha=0.5)
        assert high.combined > low.combined
        assert math.isclose(high.combined - low.combined, 0.5 * (0.3 - 0.2))


class TestScoreTokens:
    def test_self_similarity_nonempty(self):
        score = score_tokens(["x", "y"], ["x", "y"])
        assert score.combined == 1.0

    @given(TOKENS, TOKENS)
    def test_symmetry(self, a, b):
        assert score_tokens(a, b) == score_tokens(b, a)
