"""Grammar-assisted bijections between permutations of [n] and increasing trees on {0..n}.

Each map grows ``sigma^(i)`` (``sigma`` with values > i removed) and ``T^(i)``
together.  Every slot of ``sigma^(i)`` corresponds to one vertex of ``T^(i)``
carrying the same label, and inserting ``i+1`` at a slot attaches vertex ``i+1``
to a vertex chosen by the slot's label:

* ``y``, ``a`` or an unpaired ``x``: the slot's own vertex;
* an ``x`` paired with a neighbouring ``x`` (reflection principle): the vertex
  of the dual slot, ``k+1`` when slot ``k`` is on a rise, ``k-1`` on a fall.

The slot/vertex correspondence is asserted before every step, so a broken
invariant aborts with a :class:`CoherenceError` instead of returning a tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .labeling import LabelSeq, RULE_IMAGE, a_labeling, insert, l_labeling, w_labeling
from .permstat import exterior_peaks, left_peaks, updown_runs
from .poly import LaurentPoly
from .trees import IncreasingTree, even_nonroot_count, tree_labels, tree_weight

MAP_KINDS = ("updown", "leftpeak", "exterior", "unified")


class CoherenceError(AssertionError):
    """Slot labels of the permutation and vertex labels of the tree disagree."""


def _runs_correspondence(pi: tuple[int, ...]) -> list[int]:
    # corr[k] = vertex paired with slot k (index 0 unused)
    n = len(pi)
    if n == 0:
        return [None, 0]
    ends_up = (pi[-2] if n >= 2 else 0) < pi[-1]
    corr = [None] + list(pi) + [0]
    if ends_up:
        corr[n], corr[n + 1] = 0, pi[-1]
    return corr


def _exterior_correspondence(pi: tuple[int, ...]) -> list[int]:
    return [None] + list(pi) + [0]


@dataclass(frozen=True)
class _MapSpec:
    labeling: Callable[[Sequence[int]], LabelSeq]
    correspondence: Callable[[tuple[int, ...]], list]
    tree_scheme: str
    last_slot_falls: bool  # whether slot n+1 pairs with slot n


_SPECS = {
    "updown": _MapSpec(a_labeling, _runs_correspondence, "parity", False),
    "leftpeak": _MapSpec(l_labeling, _runs_correspondence, "L", False),
    "exterior": _MapSpec(w_labeling, _exterior_correspondence, "W", True),
}


@dataclass(frozen=True)
class TraceStep:
    i: int
    perm: tuple[int, ...]
    labels: LabelSeq
    position: int
    label: str
    dual: int | None
    attached_to: int

    @property
    def rule(self) -> str:
        return f"{self.label} -> {RULE_IMAGE[self.label].replace('*', '')}"

    @property
    def weight(self) -> LaurentPoly:
        return self.labels.weight


@dataclass
class InsertionTrace:
    kind: str
    perm: tuple[int, ...]
    steps: list[TraceStep] = field(default_factory=list)
    tree: IncreasingTree | None = None

    def render(self) -> str:
        """Table in the shape of the worked examples: i, labeled sigma^(i), weight, rule."""
        rows = [("i", "sigma^(i) with labeling", "weight", "substitution", "attach")]
        for s in self.steps:
            rows.append((str(s.i), s.labels.render(mark=s.position), str(s.weight), s.rule,
                         f"{s.i + 1}->{s.attached_to}"))
        final = _SPECS.get(self.kind, _SPECS["exterior"]).labeling(self.perm)
        rows.append((str(len(self.perm)), final.render(), str(final.weight), "", ""))
        widths = [max(len(r[c]) for r in rows) for c in range(5)]
        return "\n".join(" | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows)


class _Step:
    """Attachment rule for one ``sigma^(i)``; reused across candidate slots."""

    def __init__(self, spec: _MapSpec, pi: tuple[int, ...]):
        self.spec = spec
        self.pi = pi
        self.labels = spec.labeling(pi)
        self.corr = spec.correspondence(pi)

    def check(self, tree: IncreasingTree):
        tl = tree_labels(tree, self.spec.tree_scheme)
        for k in range(1, len(self.pi) + 2):
            v = self.corr[k]
            if tl[v] != self.labels.label(k):
                raise CoherenceError(
                    f"slot {k} of {self.labels.render()} is {self.labels.label(k)!r} but "
                    f"vertex {v} of tree [{tree}] is {tl[v]!r}")

    def dual(self, k: int) -> int | None:
        if self.labels.label(k) != "x":
            return None
        n = len(self.pi)
        w = (0,) + self.pi
        if k == n + 1:
            if not self.spec.last_slot_falls:
                return None
            d = n
        else:
            d = k + 1 if w[k - 1] < w[k] else k - 1
        if self.labels.label(d) != "x":
            raise CoherenceError(f"dual slot {d} of slot {k} in {self.labels.render()} is not labeled x")
        return d

    def target(self, k: int) -> tuple[int, int | None]:
        d = self.dual(k)
        return self.corr[k if d is None else d], d


def phi_trace(kind: str, perm: Sequence[int], check: bool = True) -> InsertionTrace:
    if kind == "unified":
        return InsertionTrace(kind, tuple(perm), [], unified_reflection(perm))
    spec = _spec(kind)
    perm = tuple(perm)
    trace = InsertionTrace(kind, perm)
    tree = IncreasingTree(())
    pi: tuple[int, ...] = ()
    for i in range(len(perm)):
        nxt = tuple(v for v in perm if v <= i + 1)
        k = nxt.index(i + 1) + 1
        step = _Step(spec, pi)
        if check:
            step.check(tree)
        vertex, dual = step.target(k)
        trace.steps.append(TraceStep(i, pi, step.labels, k, step.labels.label(k), dual, vertex))
        tree = tree.attach(vertex)
        pi = nxt
    if check:
        _Step(spec, pi).check(tree)
    trace.tree = tree
    return trace


def phi(kind: str, perm: Sequence[int], check: bool = True) -> IncreasingTree:
    if kind == "unified":
        return unified_reflection(perm)
    return phi_trace(kind, perm, check).tree


def phi_inverse(kind: str, tree: IncreasingTree, check: bool = True) -> tuple[int, ...]:
    """Recover ``sigma`` slot by slot: the unique slot whose forward step yields ``T^(i+1)``."""
    pi: tuple[int, ...] = ()
    for i in range(tree.n):
        want = tree.parent_of(i + 1)
        if kind == "unified":
            hits = [k for k in range(i + 1) if _unified_target(pi, k) == want]
            hits = [k if k else i + 1 for k in hits]
        else:
            step = _Step(_spec(kind), pi)
            if check:
                step.check(tree.restrict(i))
            hits = [k for k in range(1, i + 2) if step.target(k)[0] == want]
        if len(hits) != 1:
            raise CoherenceError(f"{len(hits)} slots of {pi} attach {i + 1} to {want}")
        pi = insert(pi, hits[0], i + 1)
    return pi


def _spec(kind: str) -> _MapSpec:
    try:
        return _SPECS[kind]
    except KeyError:
        raise ValueError(f"unknown map {kind!r}; choose from {MAP_KINDS}") from None


# ---------------------------------------------------------------------------
# unified form: gaps 0..i of the cyclic word 0 pi_1 ... pi_i

def _unified_target(pi: tuple[int, ...], g: int) -> int:
    w = (0,) + tuple(pi)
    m = len(w)

    def peak(j):
        return j != 0 and w[j - 1] < w[j] > w[(j + 1) % m]

    # gap g sits between w[g-1] and w[g] (cyclically); it is x iff it borders a peak
    if not (peak(g) or peak((g - 1) % m)):
        return w[g]
    rising = w[g - 1] < w[g]
    return w[(g + 1) % m] if rising else w[(g - 1) % m]


def unified_reflection(perm: Sequence[int]) -> IncreasingTree:
    """Reflection-only map on gaps ``0..n``; gap 0 is the slot after the last element."""
    perm = tuple(perm)
    parents = []
    pi: tuple[int, ...] = ()
    for i in range(len(perm)):
        nxt = tuple(v for v in perm if v <= i + 1)
        k = nxt.index(i + 1) + 1
        parents.append(_unified_target(pi, 0 if k == i + 1 else k))
        pi = nxt
    return IncreasingTree(tuple(parents))


# ---------------------------------------------------------------------------
# statistic transport

def transported_statistics(kind: str, perm: Sequence[int], tree: IncreasingTree) -> dict:
    j = even_nonroot_count(tree)
    if kind == "updown":
        return {"perm": {"updownrun": updown_runs(perm)}, "tree": {"even_nonroot": j},
                "holds": updown_runs(perm) == j}
    if kind == "leftpeak":
        m = left_peaks(perm)
        e = sum(1 for d in tree.degrees() if d % 2 == 0)  # root included
        return {"perm": {"leftpeak": m}, "tree": {"even_vertices": e}, "holds": e == 2 * m + 1}
    k = exterior_peaks(perm)
    return {"perm": {"exteriorpeak": k}, "tree": {"even_nonroot": j, "half_up": (j + 1) // 2},
            "holds": k == (j + 1) // 2}


def weights_coherent(perm: Sequence[int]) -> bool:
    """At every step of the up-down map, tree and permutation weights agree."""
    trace = phi_trace("updown", perm)
    tree = IncreasingTree(())
    for s in trace.steps:
        if tree_weight(tree, "parity") != s.weight:
            return False
        tree = tree.attach(s.attached_to)
    return tree_weight(tree, "parity") == a_labeling(perm).weight
