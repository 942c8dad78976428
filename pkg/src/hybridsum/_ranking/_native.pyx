# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled damped stationary-score iteration.

Mirrors ``_pure.power_iterate`` operation-for-operation so both kernels
return identical floats for the same input.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def power_iterate(double[:, :] weights, double damping, double epsilon, int max_iter):
    cdef Py_ssize_t n = weights.shape[0]
    cdef cnp.ndarray[double, ndim=1] out_arr = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] scores_arr = np.full(n, 1.0 / n, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] new_arr = np.empty(n, dtype=np.float64)
    cdef double[:] out_sums = out_arr
    cdef double[:] scores = scores_arr
    cdef double[:] new_scores = new_arr
    cdef double base = (1.0 - damping) / n
    cdef double dangling, share, delta, diff, total, w, start
    cdef Py_ssize_t i, j, it

    for j in range(n):
        total = 0.0
        for i in range(n):
            total += weights[j, i]
        out_sums[j] = total

    for it in range(max_iter):
        dangling = 0.0
        for j in range(n):
            if out_sums[j] == 0.0:
                dangling += scores[j]
        start = base + damping * (dangling / n)
        for i in range(n):
            new_scores[i] = start
        for j in range(n):
            if out_sums[j] == 0.0:
                continue
            share = damping * scores[j] / out_sums[j]
            for i in range(n):
                w = weights[j, i]
                if w != 0.0:
                    new_scores[i] += share * w
        delta = 0.0
        for i in range(n):
            diff = new_scores[i] - scores[i]
            if diff < 0.0:
                diff = -diff
            if diff > delta:
                delta = diff
            scores[i] = new_scores[i]
        if delta < epsilon:
            break

    total = 0.0
    for i in range(n):
        total += scores[i]
    for i in range(n):
        scores[i] = scores[i] / total
    return scores_arr
