"""Ranking kernel selection: compiled extension when built, else pure Python.

Set HYBRIDSUM_RANK_BACKEND=pure|native to force a backend (the benchmark
and the kernel-equivalence tests use this).
"""

from __future__ import annotations

import os

import numpy as np

from . import _pure

try:
    from . import _native
except ImportError:
    _native = None

_FORCED = os.environ.get("HYBRIDSUM_RANK_BACKEND", "").strip().lower()
if _FORCED == "native" and _native is None:
    raise ImportError("HYBRIDSUM_RANK_BACKEND=native but the extension is not built")

BACKEND = "pure" if _FORCED == "pure" else ("native" if _native is not None else "pure")


def power_iterate_pure(weights: np.ndarray, damping: float, epsilon: float, max_iter: int) -> np.ndarray:
    scores = _pure.power_iterate(weights.tolist(), damping, epsilon, max_iter)
    return np.asarray(scores, dtype=np.float64)


def power_iterate_native(weights: np.ndarray, damping: float, epsilon: float, max_iter: int) -> np.ndarray:
    if _native is None:
        raise RuntimeError("compiled ranking kernel is not available")
    contiguous = np.ascontiguousarray(weights, dtype=np.float64)
    return _native.power_iterate(contiguous, damping, epsilon, max_iter)


def power_iterate(weights: np.ndarray, damping: float, epsilon: float, max_iter: int) -> np.ndarray:
    """Dispatch to the selected kernel; input is an (n, n) weight matrix."""
    if BACKEND == "native":
        return power_iterate_native(weights, damping, epsilon, max_iter)
    return power_iterate_pure(weights, damping, epsilon, max_iter)


def available_backends() -> tuple[str, ...]:
    return ("pure", "native") if _native is not None else ("pure",)
