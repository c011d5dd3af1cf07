"""Permutation statistics, brute-force triangles and the up-down run recurrence."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from . import _kernels
from .poly import LaurentPoly, ONE, X, Y, ZERO

STAT_KINDS = _kernels.KINDS
KIND_ALIASES = {
    "updown": "updownrun",
    "left": "leftpeak",
    "interior": "interiorpeak",
    "exterior": "exteriorpeak",
    "alt": "altrun",
}

DEFAULT_BRUTE_MAX = 10


def brute_force_bound() -> int:
    return int(os.environ.get("PERMGRAMMAR_BRUTE_MAX", DEFAULT_BRUTE_MAX))


def canonical_kind(kind: str) -> str:
    kind = KIND_ALIASES.get(kind, kind)
    if kind not in STAT_KINDS:
        raise ValueError(f"unknown statistic {kind!r}; choose from {STAT_KINDS}")
    return kind


def as_permutation(values: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(int(v) for v in values)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse ``"3,7,5,8"`` (spaces also accepted)."""
    parts = text.replace(",", " ").split()
    if not parts:
        return ()
    try:
        return as_permutation(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad permutation literal {text!r}: {exc}") from None


def format_permutation(perm: Sequence[int]) -> str:
    return ",".join(str(v) for v in perm)


# ---------------------------------------------------------------------------
# single-permutation statistics (pure Python; the oracle for the kernels)

def _peaks(perm, lo, hi, pad_end):
    w = (0,) + tuple(perm) + ((0,) if pad_end else (None,))
    count = 0
    for i in range(lo, hi + 1):
        nxt = w[i + 1]
        if nxt is not None and w[i - 1] < w[i] > nxt:
            count += 1
    return count


def left_peaks(perm) -> int:
    return _peaks(perm, 1, len(perm) - 1, False)


def interior_peaks(perm) -> int:
    return _peaks(perm, 2, len(perm) - 1, False)


def exterior_peaks(perm) -> int:
    return _peaks(perm, 1, len(perm), True)


def _runs(seq) -> int:
    if len(seq) < 2:
        return 0
    runs = 1
    for j in range(2, len(seq)):
        if (seq[j] > seq[j - 1]) != (seq[j - 1] > seq[j - 2]):
            runs += 1
    return runs


def updown_runs(perm) -> int:
    return _runs((0,) + tuple(perm))


def alternating_runs(perm) -> int:
    return _runs(tuple(perm))


_STAT_FUNCS = {
    "leftpeak": left_peaks,
    "interiorpeak": interior_peaks,
    "exteriorpeak": exterior_peaks,
    "updownrun": updown_runs,
    "altrun": alternating_runs,
}


def stat(kind: str, perm: Sequence[int]) -> int:
    return _STAT_FUNCS[canonical_kind(kind)](perm)


def is_down_up(perm) -> bool:
    """``perm[0] > perm[1] < perm[2] > ...``."""
    return all((perm[i] > perm[i + 1]) == (i % 2 == 0) for i in range(len(perm) - 1))


# ---------------------------------------------------------------------------
# triangles

def valid_range(kind: str, n: int) -> range:
    kind = canonical_kind(kind)
    if n == 0:
        return range(0, 1)
    if kind == "leftpeak":
        return range(0, n // 2 + 1)
    if kind == "interiorpeak":
        return range(0, (n - 1) // 2 + 1)
    if kind == "exteriorpeak":
        return range(1, (n + 1) // 2 + 1)
    if kind == "updownrun":
        return range(1, n + 1)
    return range(1, n) if n >= 2 else range(0, 1)


@dataclass(frozen=True)
class StatTriangle:
    """One row of a statistic triangle; ``counts[k]`` for ``k = 0..len-1``."""

    kind: str
    n: int
    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    @property
    def row(self) -> tuple[int, ...]:
        """Counts restricted to the statistic's valid range of ``k``."""
        return tuple(self[k] for k in valid_range(self.kind, self.n))

    def total(self) -> int:
        return sum(self.counts)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(self.n, k, self[k]) for k in valid_range(self.kind, self.n)]


@lru_cache(maxsize=None)
def _brute_counts(n: int):
    counts = _kernels.stat_counts(n)
    return {kind: tuple(int(c) for c in counts[i]) for i, kind in enumerate(STAT_KINDS)}


def triangle(kind: str, n: int, method: str = "brute") -> StatTriangle:
    kind = canonical_kind(kind)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "recurrence":
        if kind != "updownrun":
            raise ValueError("the recurrence path exists only for updownrun")
        return lambda_recurrence_row(n)
    if method != "brute":
        raise ValueError(f"unknown method {method!r}")
    bound = brute_force_bound()
    if n > bound:
        hint = ("use the recurrence method (--method recurrence)" if kind == "updownrun"
                else "raise PERMGRAMMAR_BRUTE_MAX")
        raise ValueError(f"n={n} exceeds the brute-force bound {bound}; {hint}")
    counts = _brute_counts(n)[kind]
    width = max(valid_range(kind, n)) + 1
    return StatTriangle(kind, n, counts[:width])


@lru_cache(maxsize=None)
def _lambda_rows(n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    if n >= 1:
        rows.append((0, 1))
    for m in range(2, n + 1):
        prev = rows[-1]

        def p(k):
            return prev[k] if 0 <= k < len(prev) else 0

        rows.append(tuple(0 if k == 0 else k * p(k) + p(k - 1) + (m - k + 1) * p(k - 2)
                          for k in range(m + 1)))
    return tuple(rows)


def lambda_recurrence_row(n: int) -> StatTriangle:
    """``Lambda(n, k)`` from ``k L(n-1,k) + L(n-1,k-1) + (n-k+1) L(n-1,k-2)`` alone."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return StatTriangle("updownrun", n, _lambda_rows(n)[n])


# ---------------------------------------------------------------------------
# polynomial encodings

def _mono(coeff, xe, ye):
    return LaurentPoly.mono(coeff, x=xe, y=ye)


def bivariate(kind: str, n: int, method: str = "brute") -> LaurentPoly:
    """The bivariate encodings L_n, M_n, W_n, Lambda_n, R_n in x and y."""
    kind = canonical_kind(kind)
    if kind == "altrun":
        if n == 0:
            return ONE
        tri = triangle("altrun", n + 1, method)
        return _sum(_mono(tri[k], k, n - k) for k in range(1, n + 1))
    if n == 0:
        return {"leftpeak": X, "interiorpeak": ONE, "exteriorpeak": Y, "updownrun": ONE}[kind]
    tri = triangle(kind, n, method)
    if kind == "leftpeak":
        terms = (_mono(tri[k], 2 * k + 1, n - 2 * k) for k in valid_range(kind, n))
    elif kind == "interiorpeak":
        terms = (_mono(tri[k], 2 * k + 2, n - 2 * k - 1) for k in valid_range(kind, n))
    elif kind == "exteriorpeak":
        terms = (_mono(tri[k], 2 * k, n - 2 * k + 1) for k in valid_range(kind, n))
    else:
        terms = (_mono(tri[k], k, n - k) for k in valid_range(kind, n))
    return _sum(terms)


def univariate(kind: str, n: int, method: str = "brute") -> LaurentPoly:
    """``sum_k count(n, k) x^k`` with the n = 0 value 1 (R uses S_{n+1})."""
    kind = canonical_kind(kind)
    if n == 0:
        return ONE
    if kind == "altrun":
        tri = triangle(kind, n + 1, method)
        return _sum(_mono(tri[k], k, 0) for k in range(1, n + 1))
    tri = triangle(kind, n, method)
    return _sum(_mono(c, k, 0) for k, c in enumerate(tri.counts))


def _sum(polys) -> LaurentPoly:
    total = ZERO
    for p in polys:
        total = total + p
    return total


def check_row_sum(tri: StatTriangle) -> bool:
    return tri.total() == factorial(tri.n)
