"""Pure-Python damped stationary-score iteration.

Reference implementation for the compiled kernel in ``_native.pyx``;
both must keep identical arithmetic so results match bit-for-bit on the
same input.
"""

from __future__ import annotations


def power_iterate(
    weights: list[list[float]],
    damping: float,
    epsilon: float,
    max_iter: int,
) -> list[float]:
    """Iterate s_i <- (1-d)/n + d * sum_j (w[j][i] / out[j]) * s_j.

    Rows with zero out-weight spread their score uniformly.  Stops when
    the largest per-component change drops below epsilon, or after
    max_iter rounds.  The returned vector is normalized to sum 1.
    """
    n = len(weights)
    out_sums = [sum(row) for row in weights]
    scores = [1.0 / n] * n
    base = (1.0 - damping) / n
    for _ in range(max_iter):
        dangling = 0.0
        for j in range(n):
            if out_sums[j] == 0.0:
                dangling += scores[j]
        new_scores = [base + damping * (dangling / n)] * n
        for j in range(n):
            if out_sums[j] == 0.0:
                continue
            share = damping * scores[j] / out_sums[j]
            row = weights[j]
            for i in range(n):
                if row[i] != 0.0:
                    new_scores[i] += share * row[i]
        delta = max(abs(new_scores[i] - scores[i]) for i in range(n))
        scores = new_scores
        if delta < epsilon:
            break
    total = sum(scores)
    return [s / total for s in scores]
