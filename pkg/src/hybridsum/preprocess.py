"""Text cleaning, normalization, sentence splitting, and tokenization.

The chain applied to every post is:

    clean_text -> normalize -> split_sentences -> tokenize -> remove_stopwords

Tokens are plain lowercase strings; sentences keep their terminator so
extractive summaries can quote them verbatim.
"""

from __future__ import annotations

import string
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING

from .errors import DegenerateInputError

if TYPE_CHECKING:
    from .corpus_io import Post

Token = str

# Characters stripped everywhere, plus all non-whitespace control/format chars.
DEFAULT_BLACKLIST = frozenset("!$()*%@")

DEFAULT_ABBREVIATIONS = frozenset(
    {"dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "vs.", "etc.", "e.g.", "i.e.", "no."}
)

_TERMINATORS = frozenset(".!?")
_EDGE_PUNCT = string.punctuation + "…“”‘’«»"


@dataclass(frozen=True)
class PreprocessConfig:
    """Immutable preprocessing settings; load word lists once, then share."""

    blacklist: frozenset[str] = DEFAULT_BLACKLIST
    stopwords: frozenset[str] = frozenset()
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS
    lowercase: bool = True

    @classmethod
    def from_paths(
        cls,
        stopword_path: str | Path | None = None,
        abbreviation_path: str | Path | None = None,
        blacklist: frozenset[str] = DEFAULT_BLACKLIST,
        lowercase: bool = True,
    ) -> "PreprocessConfig":
        stopwords = load_wordlist(stopword_path) if stopword_path else frozenset()
        abbreviations = (
            load_wordlist(abbreviation_path) if abbreviation_path else DEFAULT_ABBREVIATIONS
        )
        return cls(
            blacklist=blacklist,
            stopwords=stopwords,
            abbreviations=abbreviations,
            lowercase=lowercase,
        )


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    tokens: tuple[Token, ...]
    all_tokens: tuple[Token, ...]


@dataclass(frozen=True)
class PreprocessedDoc:
    post_id: str
    sentences: tuple[Sentence, ...]
    flat_tokens: tuple[Token, ...] = field(init=False)

    def __post_init__(self):
        flat = tuple(t for s in self.sentences for t in s.tokens)
        object.__setattr__(self, "flat_tokens", flat)


def load_wordlist(path: str | Path) -> frozenset[str]:
    """Read one lowercase word per line; '#'-prefixed lines are comments."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip()
            if word and not word.startswith("#"):
                words.add(word.lower())
    return frozenset(words)


def _collapse_whitespace(text: str) -> str:
    return " ".join(text.split())


def _is_control(ch: str) -> bool:
    return unicodedata.category(ch) in ("Cc", "Cf") and not ch.isspace()


def clean_text(raw: str, blacklist: frozenset[str] = DEFAULT_BLACKLIST) -> str:
    """Drop blacklisted and non-printable characters, collapse whitespace."""
    kept = [ch for ch in raw if ch not in blacklist and not _is_control(ch)]
    return _collapse_whitespace("".join(kept))


def normalize(text: str, lowercase: bool = True) -> str:
    """Unicode NFC, optional lowercasing, whitespace collapsed."""
    text = unicodedata.normalize("NFC", text)
    if lowercase:
        text = text.lower()
    return _collapse_whitespace(text)


def split_sentences(
    text: str, abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS
) -> list[str]:
    """Split at '.', '!', '?' followed by whitespace or end of text.

    Terminators stay attached to their sentence.  A terminator ending a
    listed abbreviation (matched case-insensitively against the word it
    closes) does not split.
    """
    sentences: list[str] = []
    start = 0
    for i, ch in enumerate(text):
        if ch not in _TERMINATORS:
            continue
        at_end = i == len(text) - 1
        if not at_end and not text[i + 1].isspace():
            continue
        word_start = i
        while word_start > start and not text[word_start - 1].isspace():
            word_start -= 1
        if text[word_start : i + 1].lower() in abbreviations:
            continue
        segment = text[start : i + 1].strip()
        if segment:
            sentences.append(segment)
        start = i + 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def tokenize(sentence_text: str) -> list[Token]:
    """Whitespace split, then strip punctuation off token edges."""
    tokens = []
    for raw in sentence_text.split():
        token = raw.strip(_EDGE_PUNCT)
        if token:
            tokens.append(token)
    return tokens


def remove_stopwords(tokens: list[Token], stoplist: frozenset[str]) -> list[Token]:
    return [t for t in tokens if t not in stoplist]


def chain_text(raw: str, config: PreprocessConfig | None = None) -> str:
    """clean_text followed by normalize, under one config."""
    config = config or PreprocessConfig()
    return normalize(clean_text(raw, config.blacklist), config.lowercase)


def chain_tokens(raw: str, config: PreprocessConfig | None = None) -> list[Token]:
    """Stopword-removed tokens of the whole text, ignoring sentence bounds."""
    config = config or PreprocessConfig()
    return remove_stopwords(tokenize(chain_text(raw, config)), config.stopwords)


def preprocess_post(post: "Post", config: PreprocessConfig | None = None) -> PreprocessedDoc:
    """Run the full chain on one post.

    Raises DegenerateInputError when the text is empty, or becomes empty
    after cleaning.
    """
    config = config or PreprocessConfig()
    if not post.raw_text.strip():
        raise DegenerateInputError(f"post {post.id!r} has empty text")
    text = chain_text(post.raw_text, config)
    if not text:
        raise DegenerateInputError(f"post {post.id!r} is empty after cleaning")
    sentences = []
    for index, sentence_text in enumerate(split_sentences(text, config.abbreviations)):
        all_tokens = tuple(tokenize(sentence_text))
        tokens = tuple(remove_stopwords(list(all_tokens), config.stopwords))
        sentences.append(
            Sentence(index=index, text=sentence_text, tokens=tokens, all_tokens=all_tokens)
        )
    if not sentences:
        raise DegenerateInputError(f"post {post.id!r} has no sentences after cleaning")
    return PreprocessedDoc(post_id=post.id, sentences=tuple(sentences))
