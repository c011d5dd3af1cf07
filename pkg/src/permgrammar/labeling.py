"""Grammatical labelings of permutations and the LW/AL decompositions.

Labels sit on positions ``1..n+1``: position ``i`` is the slot immediately
before ``perm[i-1]`` and position ``n+1`` is the slot after the last element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .permstat import exterior_peaks, left_peaks
from .poly import LaurentPoly, ONE, parse_poly

RULE_IMAGE = {"a": "a*x", "x": "x*y", "y": "x^2"}


@dataclass(frozen=True)
class LabelSeq:
    perm: tuple[int, ...]
    labels: tuple[str, ...]  # labels[i - 1] belongs to position i

    def __post_init__(self):
        if len(self.labels) != len(self.perm) + 1:
            raise ValueError("need exactly n+1 labels")

    def label(self, position: int) -> str:
        return self.labels[position - 1]

    @property
    def weight(self) -> LaurentPoly:
        return label_weight(self)

    def render(self, mark: int | None = None) -> str:
        """``0 y 3 x 7 ... 2 a``; ``mark`` brackets the label at that position."""
        out = ["0"]
        for pos, lab in enumerate(self.labels, start=1):
            out.append(f"[{lab}]" if pos == mark else lab)
            if pos <= len(self.perm):
                out.append(str(self.perm[pos - 1]))
        return " ".join(out)

    def __str__(self):
        return self.render()


def label_weight(ls: LabelSeq | Sequence[str]) -> LaurentPoly:
    labels = ls.labels if isinstance(ls, LabelSeq) else ls
    exps = {}
    for lab in labels:
        exps[lab] = exps.get(lab, 0) + 1
    return LaurentPoly.mono(1, **exps)


def a_labeling(perm: Sequence[int]) -> LabelSeq:
    """Up-down labeling: one ``a``, and ``x`` marks as many slots as there are up-down runs."""
    perm = tuple(perm)
    n = len(perm)
    if n == 0:
        return LabelSeq(perm, ("a",))
    w = (0,) + perm
    lab = [None] * (n + 2)
    i = 0
    while i < n:
        j = i
        if w[i + 1] > w[i]:
            while j < n and w[j + 1] > w[j]:
                j += 1
            for p in range(i + 1, j):
                lab[p] = "y"
            if j < n:
                lab[j] = "x"
            else:
                lab[n] = "a"
                lab[n + 1] = "x"
        else:
            while j < n and w[j + 1] < w[j]:
                j += 1
            lab[i + 1] = "x"
            for p in range(i + 2, j + 1):
                lab[p] = "y"
            if j == n:
                lab[n + 1] = "a"
        i = j
    return LabelSeq(perm, tuple(lab[1:]))


def l_labeling(perm: Sequence[int]) -> LabelSeq:
    """``x`` on both slots around each left peak and on the last slot, ``y`` elsewhere."""
    perm = tuple(perm)
    n = len(perm)
    w = (0,) + perm
    lab = ["y"] * (n + 2)
    for j in range(1, n):
        if w[j - 1] < w[j] > w[j + 1]:
            lab[j] = lab[j + 1] = "x"
    lab[n + 1] = "x"
    return LabelSeq(perm, tuple(lab[1:]))


def w_labeling(perm: Sequence[int]) -> LabelSeq:
    """``x`` on both slots around each exterior peak, ``y`` elsewhere."""
    perm = tuple(perm)
    n = len(perm)
    w = (0,) + perm + (0,)
    lab = ["y"] * (n + 2)
    for j in range(1, n + 1):
        if w[j - 1] < w[j] > w[j + 1]:
            lab[j] = lab[j + 1] = "x"
    return LabelSeq(perm, tuple(lab[1:]))


LABELINGS = {"a": a_labeling, "l": l_labeling, "w": w_labeling}


def insert(perm: Sequence[int], position: int, value: int | None = None) -> tuple[int, ...]:
    """Insert ``value`` (default ``n+1``) into slot ``position``."""
    perm = tuple(perm)
    if value is None:
        value = len(perm) + 1
    if not 1 <= position <= len(perm) + 1:
        raise ValueError(f"position {position} outside 1..{len(perm) + 1}")
    return perm[: position - 1] + (value,) + perm[position - 1:]


@dataclass(frozen=True)
class InsertionReport:
    position: int
    old_label: str
    applied_rule: str
    old_weight: LaurentPoly
    new_weight: LaurentPoly
    ok: bool


def insert_consistency(perm: Sequence[int], position: int, labeling=a_labeling) -> InsertionReport:
    """Does inserting ``n+1`` at ``position`` act on the weight as the label's rule?"""
    before = labeling(perm)
    old = before.label(position)
    image = parse_poly(RULE_IMAGE[old])
    expected = before.weight * LaurentPoly.var(old).inverse() * image
    after = labeling(insert(perm, position)).weight
    return InsertionReport(position, old, f"{old} -> {RULE_IMAGE[old].replace('*', '')}",
                           before.weight, after, after == expected)


@dataclass(frozen=True)
class Decomposition:
    kind: str
    blocks: tuple[tuple[int, ...], ...]

    def __str__(self):
        return " | ".join(" ".join(map(str, b)) for b in self.blocks)


def decompose(kind: str, perm: Sequence[int]) -> Decomposition:
    """LW cuts after the minimum of the remaining suffix, AL after its maximum."""
    kind = kind.upper()
    if kind not in ("LW", "AL"):
        raise ValueError(f"unknown decomposition {kind!r}")
    pick = min if kind == "LW" else max
    rest = tuple(perm)
    blocks = []
    while rest:
        cut = rest.index(pick(rest)) + 1
        blocks.append(rest[:cut])
        rest = rest[cut:]
    return Decomposition(kind, tuple(blocks))


def standardize(seq: Sequence[int]) -> tuple[int, ...]:
    order = sorted(seq)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in seq)


def lw_exterior_sum(perm: Sequence[int]) -> int:
    """Sum of exterior peaks of the LW blocks with their final minimum removed."""
    return sum(exterior_peaks(b[:-1]) for b in decompose("LW", perm).blocks)


def al_block_weight(perm: Sequence[int]) -> LaurentPoly:
    """Product of ``x^(2 leftpeak(block') + 1)`` over AL blocks, final maximum removed."""
    weight = ONE
    for b in decompose("AL", perm).blocks:
        weight = weight * LaurentPoly.mono(1, x=2 * left_peaks(b[:-1]) + 1)
    return weight
