"""Abstractive candidates via remote seq2seq backends, plus a local stub.

Every backend speaks the same wire protocol: POST {endpoint}/summarize
with {"text": ..., "max_words": ...}, answering {"summary": ...,
"model": ...} on 200.  The stub backend is a deterministic lead-sentence
stand-in so tests and offline runs need no server.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from urllib.parse import urlparse

import requests

from .errors import (
    BackendEmptyError,
    BackendError,
    BackendProtocolError,
    BackendTimeoutError,
    BackendUnreachableError,
)
from .models import SummaryCandidate
from .preprocess import split_sentences

STUB_BACKEND_NAME = "stub"
STUB_ENDPOINT = "stub:"

DEFAULT_MAX_WORKERS = 4


@dataclass(frozen=True)
class BackendSpec:
    name: str
    endpoint: str
    timeout_ms: int = 30000
    max_summary_words: int = 40
    retries: int = 1  # extra attempts on retryable failures
    backoff_ms: int = 500

    def __post_init__(self):
        if not self.name:
            raise ValueError("backend name must be nonempty")
        if self.timeout_ms <= 0 or self.max_summary_words <= 0:
            raise ValueError("timeout_ms and max_summary_words must be positive")
        if not self.is_stub and not urlparse(self.endpoint).scheme:
            raise ValueError(f"backend endpoint {self.endpoint!r} is not a valid URL")

    @property
    def is_stub(self) -> bool:
        return self.name == STUB_BACKEND_NAME or self.endpoint.startswith(STUB_ENDPOINT)


@dataclass(frozen=True)
class AbstractiveRequest:
    text: str
    max_words: int

    def __post_init__(self):
        if not self.text:
            raise ValueError("request text must be nonempty")
        if self.max_words <= 0:
            raise ValueError("max_words must be positive")


@dataclass(frozen=True)
class AbstractiveResponse:
    summary: str
    backend_name: str


def _truncate_words(text: str, max_words: int) -> str:
    words = text.split()
    return " ".join(words[:max_words])


def summarize_stub(req: AbstractiveRequest) -> SummaryCandidate:
    """Deterministic lead abstraction: first sentence, capped at max_words."""
    if not req.text.strip():
        raise ValueError("cannot summarize empty text")
    sentences = split_sentences(req.text.strip())
    lead = sentences[0] if sentences else req.text.strip()
    return SummaryCandidate.make(
        text=_truncate_words(lead, req.max_words), source=STUB_BACKEND_NAME
    )


def _post_once(spec: BackendSpec, req: AbstractiveRequest) -> AbstractiveResponse:
    url = spec.endpoint.rstrip("/") + "/summarize"
    try:
        response = requests.post(
            url,
            json={"text": req.text, "max_words": req.max_words},
            timeout=spec.timeout_ms / 1000.0,
        )
    except requests.Timeout as exc:
        raise BackendTimeoutError(f"backend {spec.name!r} timed out after {spec.timeout_ms} ms") from exc
    except requests.ConnectionError as exc:
        raise BackendUnreachableError(f"backend {spec.name!r} unreachable at {url}") from exc
    if response.status_code != 200:
        raise BackendProtocolError(
            f"backend {spec.name!r} answered status {response.status_code}"
        )
    try:
        body = response.json()
    except ValueError as exc:
        raise BackendProtocolError(f"backend {spec.name!r} sent a non-JSON body") from exc
    summary = body.get("summary") if isinstance(body, dict) else None
    if not isinstance(summary, str):
        raise BackendProtocolError(f"backend {spec.name!r} response lacks a 'summary' string")
    if not summary.strip():
        raise BackendEmptyError(f"backend {spec.name!r} returned an empty summary")
    return AbstractiveResponse(summary=summary.strip(), backend_name=spec.name)


def summarize_remote(spec: BackendSpec, req: AbstractiveRequest) -> SummaryCandidate:
    """Call one backend over the wire, retrying retryable failures once.

    Overlong answers are truncated to whole words at req.max_words.
    """
    attempts = spec.retries + 1
    last_error: BackendError | None = None
    for attempt in range(attempts):
        try:
            answer = _post_once(spec, req)
            return SummaryCandidate.make(
                text=_truncate_words(answer.summary, req.max_words), source=spec.name
            )
        except BackendError as exc:
            last_error = exc
            if not exc.retryable or attempt == attempts - 1:
                raise
            time.sleep(spec.backoff_ms / 1000.0)
    raise last_error  # unreachable; keeps type checkers happy


def summarize(spec: BackendSpec, req: AbstractiveRequest) -> SummaryCandidate:
    """Dispatch to the stub or the wire client based on the spec."""
    if spec.is_stub:
        return summarize_stub(req)
    return summarize_remote(spec, req)


def is_reachable(spec: BackendSpec, timeout_s: float = 2.0) -> bool:
    """TCP-connect probe; the stub counts as always reachable."""
    import socket

    if spec.is_stub:
        return True
    parsed = urlparse(spec.endpoint)
    host = parsed.hostname or ""
    port = parsed.port or (443 if parsed.scheme == "https" else 80)
    try:
        with socket.create_connection((host, port), timeout=timeout_s):
            return True
    except OSError:
        return False


def summarize_all(
    specs: list[BackendSpec],
    text: str,
    max_workers: int = DEFAULT_MAX_WORKERS,
) -> list[SummaryCandidate | BackendError]:
    """Run every backend, concurrently up to max_workers.

    The output list matches the spec order; a failed backend contributes
    its error instead of a candidate.
    """
    def run(spec: BackendSpec) -> SummaryCandidate | BackendError:
        try:
            return summarize(spec, AbstractiveRequest(text=text, max_words=spec.max_summary_words))
        except BackendError as exc:
            return exc

    if len(specs) <= 1 or max_workers <= 1:
        return [run(spec) for spec in specs]
    with ThreadPoolExecutor(max_workers=min(max_workers, len(specs))) as pool:
        return list(pool.map(run, specs))


def best_abstractive(
    candidates: list[SummaryCandidate], source_text: str, alpha: float = 0.5
) -> SummaryCandidate:
    """Pick the abstractive winner with the shared selection rule."""
    from .selector import SelectorConfig, pick_best

    return pick_best(candidates, source_text, SelectorConfig(alpha=alpha))
