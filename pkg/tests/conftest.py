"""Shared fixtures: fixture paths, preprocess config, toy docs, stub server."""

from __future__ import annotations

from pathlib import Path

import pytest

from hybridsum.corpus_io import Post
from hybridsum.preprocess import PreprocessConfig, preprocess_post
from hybridsum.similarity import SynonymLexicon
from hybridsum.stub_backend import StubBackendServer

FIXTURES = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def pre_config() -> PreprocessConfig:
    return PreprocessConfig.from_paths(
        stopword_path=FIXTURES / "stopwords_en.txt",
        abbreviation_path=FIXTURES / "abbreviations.txt",
    )


@pytest.fixture(scope="session")
def lexicon() -> SynonymLexicon:
    return SynonymLexicon.load(FIXTURES / "lexicon.tsv")


@pytest.fixture
def make_doc():
    """Build a PreprocessedDoc from raw text through the real chain."""

    def build(text: str, post_id: str = "doc", config: PreprocessConfig | None = None):
        return preprocess_post(
            Post(id=post_id, hashtags=frozenset(), raw_text=text),
            config or PreprocessConfig(),
        )

    return build


@pytest.fixture
def stub_server():
    """Factory for stub backend servers; stops them all at teardown."""
    servers: list[StubBackendServer] = []

    def start(mode: str = "lead", delay_ms: int = 0, model_name: str = "stub-lead"):
        server = StubBackendServer(mode=mode, delay_ms=delay_ms, model_name=model_name)
        servers.append(server)
        return server.start()

    yield start
    for server in servers:
        server.stop()
