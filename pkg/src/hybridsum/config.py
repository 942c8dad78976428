"""Pipeline configuration: a TOML file plus command-line overrides.

Relative paths in the file are resolved against the file's directory,
so a config travels with its fixtures.  Flags win over file values.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .abstractive import BackendSpec
from .errors import StartupError
from .evaluation import DEFAULT_THRESHOLD
from .extractive import ExtractiveParams
from .selector import SelectorConfig

RESULTS_FILE = "results.jsonl"
LABELS_FILE = "labels.csv"
METRICS_FILE = "metrics.json"
SELECTION_STATS_FILE = "selection_stats.json"
RUN_LOG_FILE = "run.log"


@dataclass(frozen=True)
class PipelineConfig:
    input_path: str
    references_path: str
    stopwords_path: str
    output_path: str
    lexicon_path: str | None = None
    abbreviations_path: str | None = None
    labels_path: str | None = None  # default: <output>/labels.csv
    input_format: str = "csv"
    backends: tuple[BackendSpec, ...] = ()
    selector: SelectorConfig = field(default_factory=SelectorConfig)
    extractive: ExtractiveParams = field(default_factory=ExtractiveParams)
    threshold: float = DEFAULT_THRESHOLD
    hashtag_filter: frozenset[str] | None = None
    concurrency: int = 4
    error_budget: float = 0.10
    ui_path: str | None = None

    def __post_init__(self):
        if not 0.0 <= self.threshold <= 1.0:
            raise StartupError(f"threshold must be in [0, 1], got {self.threshold}")
        if self.concurrency < 1:
            raise StartupError("concurrency must be at least 1")
        if not self.backends:
            raise StartupError("at least one backend (or the stub) must be configured")

    @property
    def run_dir(self) -> Path:
        return Path(self.output_path)

    @property
    def results_file(self) -> Path:
        return self.run_dir / RESULTS_FILE

    @property
    def labels_file(self) -> Path:
        return Path(self.labels_path) if self.labels_path else self.run_dir / LABELS_FILE

    @property
    def metrics_file(self) -> Path:
        return self.run_dir / METRICS_FILE

    @property
    def selection_stats_file(self) -> Path:
        return self.run_dir / SELECTION_STATS_FILE

    @property
    def run_log_file(self) -> Path:
        return self.run_dir / RUN_LOG_FILE


def _resolve(base: Path, value: str | None) -> str | None:
    if value is None:
        return None
    path = Path(value)
    return str(path if path.is_absolute() else base / path)


def _backend_from_table(table: dict) -> BackendSpec:
    try:
        return BackendSpec(
            name=table["name"],
            endpoint=table.get("endpoint", "stub:"),
            timeout_ms=int(table.get("timeout_ms", 30000)),
            max_summary_words=int(table.get("max_summary_words", 40)),
            retries=int(table.get("retries", 1)),
            backoff_ms=int(table.get("backoff_ms", 500)),
        )
    except (KeyError, ValueError) as exc:
        raise StartupError(f"invalid backend entry {table!r}: {exc}") from exc


def load_config(
    path: str | Path,
    threshold: float | None = None,
    hashtags: set[str] | None = None,
    output: str | None = None,
    ui: str | None = None,
) -> PipelineConfig:
    """Parse the TOML config; keyword arguments override file values."""
    path = Path(path)
    if not path.is_file():
        raise StartupError(f"config file not found: {path}")
    with open(path, "rb") as fh:
        try:
            raw = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise StartupError(f"config file {path} is not valid TOML: {exc}") from exc
    base = path.parent
    for key in ("input", "references", "stopwords", "output"):
        if key not in raw:
            raise StartupError(f"config file {path} is missing required key {key!r}")

    backends = tuple(_backend_from_table(t) for t in raw.get("backends", [{"name": "stub"}]))
    selector_table = raw.get("selector", {})
    extractive_table = raw.get("extractive", {})
    try:
        selector = SelectorConfig(
            alpha=float(selector_table.get("alpha", 0.5)),
            tie_epsilon=float(selector_table.get("tie_epsilon", 0.01)),
        )
        extractive = ExtractiveParams(
            damping=float(extractive_table.get("damping", 0.85)),
            epsilon=float(extractive_table.get("epsilon", 1e-6)),
            max_iter=int(extractive_table.get("max_iter", 100)),
            k=int(extractive_table.get("k", 1)),
            lexrank_threshold=float(extractive_table.get("lexrank_threshold", 0.1)),
        )
    except ValueError as exc:
        raise StartupError(f"invalid config value: {exc}") from exc

    file_tags = raw.get("hashtags")
    hashtag_filter = frozenset(file_tags) if file_tags else None
    if hashtags is not None:
        hashtag_filter = frozenset(hashtags) or None

    config = PipelineConfig(
        input_path=_resolve(base, raw["input"]),
        references_path=_resolve(base, raw["references"]),
        stopwords_path=_resolve(base, raw["stopwords"]),
        lexicon_path=_resolve(base, raw.get("lexicon")),
        abbreviations_path=_resolve(base, raw.get("abbreviations")),
        output_path=_resolve(base, output if output is not None else raw["output"]),
        labels_path=_resolve(base, raw.get("labels")),
        input_format=raw.get("input_format", "csv"),
        backends=backends,
        selector=selector,
        extractive=extractive,
        threshold=float(raw.get("threshold", DEFAULT_THRESHOLD)),
        hashtag_filter=hashtag_filter,
        concurrency=int(raw.get("concurrency", 4)),
        error_budget=float(raw.get("error_budget", 0.10)),
        ui_path=_resolve(base, ui if ui is not None else raw.get("ui")),
    )
    if threshold is not None:
        if not 0.0 <= threshold <= 1.0:
            raise StartupError(f"threshold must be in [0, 1], got {threshold}")
        config = replace(config, threshold=threshold)
    return config
