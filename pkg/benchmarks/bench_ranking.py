#!/usr/bin/env python3
"""Benchmark the compiled ranking kernel against the pure-Python fallback.

    python benchmarks/bench_ranking.py [--sizes 50 200 500] [--repeats 5]

Both kernels run the same damped stationary-score iteration on identical
random symmetric graphs; the table reports best-of-N wall times and the
speedup.  Result vectors are compared to confirm the kernels agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hybridsum import _ranking

DAMPING = 0.85
EPSILON = 1e-10
MAX_ITER = 1000


def random_graph(rng: np.random.Generator, n: int) -> np.ndarray:
    weights = np.triu(rng.random((n, n)) * (rng.random((n, n)) < 0.3), k=1)
    return weights + weights.T


def best_of(repeats: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[50, 200, 500])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if "native" not in _ranking.available_backends():
        print("compiled kernel not built; install with a C toolchain to compare")
        return 1

    rng = np.random.default_rng(7)
    print(f"{'n':>6} {'pure (ms)':>12} {'native (ms)':>12} {'speedup':>9}")
    for n in args.sizes:
        weights = random_graph(rng, n)
        pure = _ranking.power_iterate_pure(weights, DAMPING, EPSILON, MAX_ITER)
        native = _ranking.power_iterate_native(weights, DAMPING, EPSILON, MAX_ITER)
        assert np.abs(pure - native).max() < 1e-12, "kernels disagree"
        t_pure = best_of(args.repeats, _ranking.power_iterate_pure, weights, DAMPING, EPSILON, MAX_ITER)
        t_native = best_of(args.repeats, _ranking.power_iterate_native, weights, DAMPING, EPSILON, MAX_ITER)
        print(f"{n:>6} {t_pure * 1e3:>12.2f} {t_native * 1e3:>12.2f} {t_pure / t_native:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
