"""Brute-force permutation-statistic kernels.

Two interchangeable backends count all five statistics over every permutation
of ``[n]`` with a given first element:

* numba ``@njit`` loops over lexicographic successors (default), and
* a pure-numpy path that materialises the permutation block and reduces it
  with vectorised comparisons.

Set ``PERMGRAMMAR_DISABLE_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

# row order of the count matrix
KINDS = ("leftpeak", "interiorpeak", "exteriorpeak", "updownrun", "altrun")

try:
    if os.environ.get("PERMGRAMMAR_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes"):
        raise ImportError("numba disabled by environment")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numba path

def _next_permutation(p):
    n = p.shape[0]
    i = n - 2
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    p[i], p[j] = p[j], p[i]
    lo, hi = i + 1, n - 1
    while lo < hi:
        p[lo], p[hi] = p[hi], p[lo]
        lo += 1
        hi -= 1
    return True


def _accumulate(p, counts):
    n = p.shape[0]
    lp = 0
    ip = 0
    ep = 0
    for i in range(n):
        prev = p[i - 1] if i > 0 else 0
        nxt = p[i + 1] if i < n - 1 else 0
        if prev < p[i] and p[i] > nxt:
            ep += 1
            if i < n - 1:
                lp += 1
                if i > 0:
                    ip += 1
    ud = 0
    ar = 0
    if n > 0:
        ud = 1
        # step j compares p[j] with p[j-1] (p[-1] taken as 0)
        up_prev = True
        for j in range(1, n):
            up = p[j] > p[j - 1]
            if up != up_prev:
                ud += 1
            up_prev = up
    if n > 1:
        ar = 1
        up_prev = p[1] > p[0]
        for j in range(2, n):
            up = p[j] > p[j - 1]
            if up != up_prev:
                ar += 1
            up_prev = up
    counts[0, lp] += 1
    counts[1, ip] += 1
    counts[2, ep] += 1
    counts[3, ud] += 1
    counts[4, ar] += 1


def _counts_with_first(n, first):
    counts = np.zeros((5, n + 2), dtype=np.int64)
    p = np.empty(n, dtype=np.int64)
    p[0] = first
    k = 1
    for v in range(1, n + 1):
        if v != first:
            p[k] = v
            k += 1
    while True:
        _accumulate(p, counts)
        if not _next_permutation(p) or p[0] != first:
            break
    return counts


if HAVE_NUMBA:
    _next_permutation = njit(cache=True)(_next_permutation)
    _accumulate = njit(cache=True)(_accumulate)
    _counts_with_first_jit = njit(cache=True)(_counts_with_first)
else:
    _counts_with_first_jit = None


# ---------------------------------------------------------------------------
# numpy path

def all_permutations(n: int) -> np.ndarray:
    """Every permutation of ``1..n`` as rows of an ``(n!, n)`` int8 array."""
    perms = np.zeros((1, 0), dtype=np.int8)
    for m in range(1, n + 1):
        rows = perms.shape[0]
        out = np.empty((rows * m, m), dtype=np.int8)
        for pos in range(m):
            block = out[pos * rows:(pos + 1) * rows]
            block[:, :pos] = perms[:, :pos]
            block[:, pos] = m
            block[:, pos + 1:] = perms[:, pos:]
        perms = out
    return perms


def stat_matrix(perms: np.ndarray) -> np.ndarray:
    """Per-row statistics, shape ``(rows, 5)`` in :data:`KINDS` order."""
    rows, n = perms.shape
    out = np.zeros((rows, 5), dtype=np.int64)
    if n == 0:
        return out
    w = perms.astype(np.int16)
    zero = np.zeros((rows, 1), dtype=np.int16)
    padded = np.concatenate([zero, w, zero], axis=1)
    peak = (padded[:, 1:-1] > padded[:, :-2]) & (padded[:, 1:-1] > padded[:, 2:])
    out[:, 2] = peak.sum(axis=1)
    out[:, 0] = peak[:, : n - 1].sum(axis=1)
    out[:, 1] = peak[:, 1: n - 1].sum(axis=1) if n > 2 else 0
    steps = padded[:, 1:-1] > padded[:, :-2]  # step j: w_j vs w_{j-1}, w_0 = 0
    out[:, 3] = 1 + (steps[:, 1:] != steps[:, :-1]).sum(axis=1)
    if n > 1:
        out[:, 4] = 1 + (steps[:, 2:] != steps[:, 1:-1]).sum(axis=1)
    return out


def _counts_with_first_numpy(n, first):
    rest = all_permutations(n - 1)
    # relabel 1..n-1 onto [1..n] \ {first}
    mapping = np.array([0] + [v for v in range(1, n + 1) if v != first], dtype=np.int8)
    perms = np.concatenate([np.full((rest.shape[0], 1), first, dtype=np.int8), mapping[rest]], axis=1)
    stats = stat_matrix(perms)
    counts = np.zeros((5, n + 2), dtype=np.int64)
    for row in range(5):
        counts[row] += np.bincount(stats[:, row], minlength=n + 2)[: n + 2]
    return counts


def counts_with_first(n: int, first: int, use_numba: bool | None = None) -> np.ndarray:
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba:
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend unavailable")
        return _counts_with_first_jit(n, first)
    return _counts_with_first_numpy(n, first)


def stat_counts(n: int, use_numba: bool | None = None) -> np.ndarray:
    """Count matrix ``counts[kind, k]`` over all of S_n (partitioned by first element)."""
    counts = np.zeros((5, n + 2), dtype=np.int64)
    if n == 0:
        counts[:, 0] = 1
        return counts
    for first in range(1, n + 1):
        counts += counts_with_first(n, first, use_numba)
    return counts
