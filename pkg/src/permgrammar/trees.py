"""Increasing trees on {0..n} stored as parent arrays, and their labelings."""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .poly import LaurentPoly

DEFAULT_TREE_MAX = 8
TREE_SCHEMES = ("parity", "L", "W")


@dataclass(frozen=True)
class IncreasingTree:
    """``parent[v-1]`` is the parent of vertex ``v``; the root is 0."""

    parent: tuple[int, ...]

    def __post_init__(self):
        for v, p in enumerate(self.parent, start=1):
            if not 0 <= p < v:
                raise ValueError(f"vertex {v} has parent {p}; need 0 <= parent < v")

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "IncreasingTree":
        return cls(tuple(int(p) for p in parents))

    @property
    def n(self) -> int:
        return len(self.parent)

    def parent_of(self, v: int) -> int:
        return self.parent[v - 1]

    def degrees(self) -> list[int]:
        """Child counts indexed by vertex."""
        deg = [0] * (self.n + 1)
        for p in self.parent:
            deg[p] += 1
        return deg

    def children(self, v: int) -> list[int]:
        return [w for w, p in enumerate(self.parent, start=1) if p == v]

    def restrict(self, i: int) -> "IncreasingTree":
        """Subtree on vertices ``0..i``."""
        return IncreasingTree(self.parent[:i])

    def attach(self, parent: int) -> "IncreasingTree":
        return IncreasingTree(self.parent + (parent,))

    def to_json(self) -> dict:
        return {"n": self.n, "parent": list(self.parent)}

    @classmethod
    def from_json(cls, data) -> "IncreasingTree":
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, list):
            return cls.from_parents(data)
        tree = cls.from_parents(data["parent"])
        if "n" in data and data["n"] != tree.n:
            raise ValueError(f"n={data['n']} disagrees with parent array of length {tree.n}")
        return tree

    def __str__(self):
        return ", ".join(f"{v}->{p}" for v, p in enumerate(self.parent, start=1))


def tree_max() -> int:
    return int(os.environ.get("PERMGRAMMAR_TREE_MAX", DEFAULT_TREE_MAX))


def enumerate_trees(n: int, bound: int | None = None) -> Iterator[IncreasingTree]:
    """All ``n!`` increasing trees: vertex ``v`` attaches to any of ``0..v-1``."""
    bound = tree_max() if bound is None else bound
    if n > bound:
        raise ValueError(f"n={n} exceeds the tree enumeration bound {bound}")
    for parents in itertools.product(*(range(v) for v in range(1, n + 1))):
        yield IncreasingTree(parents)


def tree_labels(tree: IncreasingTree, scheme: str = "parity") -> list[str]:
    """Per-vertex labels; nonroot vertices get ``x`` for even child count, ``y`` for odd.

    The root gets ``a`` under ``parity``, its own parity under ``L``, and the
    flipped parity under ``W`` (a lone root starts out as ``y``).
    """
    deg = tree.degrees()
    labels = ["x" if d % 2 == 0 else "y" for d in deg]
    if scheme == "parity":
        labels[0] = "a"
    elif scheme == "W":
        labels[0] = "y" if deg[0] % 2 == 0 else "x"
    elif scheme != "L":
        raise ValueError(f"unknown tree labeling {scheme!r}")
    return labels


def tree_weight(tree: IncreasingTree, scheme: str = "parity") -> LaurentPoly:
    exps: dict[str, int] = {}
    for lab in tree_labels(tree, scheme):
        exps[lab] = exps.get(lab, 0) + 1
    return LaurentPoly.mono(1, **exps)


def even_nonroot_count(tree: IncreasingTree) -> int:
    return sum(1 for d in tree.degrees()[1:] if d % 2 == 0)


def is_even_tree(tree: IncreasingTree) -> bool:
    return all(d % 2 == 0 for d in tree.degrees()[1:])
