import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from conftest import permutations_of
from permgrammar import bijection, permstat, trees
from permgrammar.bijection import CoherenceError, phi, phi_inverse, phi_trace, unified_reflection
from permgrammar.trees import IncreasingTree

FIT_PERM = (1, 5, 4, 6, 7, 3, 9, 8, 2)
FIT = (0, 1, 0, 2, 3, 3, 6, 2, 2)
KINDS = ("updown", "leftpeak", "exterior")


def test_worked_examples():
    assert phi("updown", FIT_PERM).parent == FIT
    assert phi("leftpeak", FIT_PERM).parent == FIT
    assert phi("updown", (1, 2)).parent == (0, 1)
    assert phi("updown", (2, 1)).parent == (0, 0)
    assert phi("updown", (3, 2, 9, 6, 7, 1, 8, 4, 5)).parent == (0, 0, 1, 0, 4, 1, 6, 4, 6)
    assert unified_reflection((6, 2, 4, 3, 1, 5)).parent == (0, 0, 2, 1, 0, 2)
    assert unified_reflection((1,)).parent == (0,)


def test_inverse_examples():
    assert phi_inverse("updown", IncreasingTree(FIT)) == FIT_PERM
    assert phi_inverse("updown", IncreasingTree((0, 0))) == (2, 1)
    assert phi_inverse("leftpeak", IncreasingTree(FIT)) == FIT_PERM
    assert phi_inverse("unified", IncreasingTree((0, 0, 2, 1, 0, 2))) == (6, 2, 4, 3, 1, 5)


def test_trace_matches_worked_table():
    tr = phi_trace("updown", FIT_PERM)
    assert [s.attached_to for s in tr.steps] == list(FIT)
    assert tr.steps[5].labels.render(mark=tr.steps[5].position) == "0 y 1 x 5 x 4 [y] 3 y 2 a"
    assert tr.steps[5].rule == "y -> x^2"
    table = tr.render().splitlines()
    assert len(table) == len(FIT_PERM) + 2
    assert "0 y 1 x 5 x 4 y 6 x 7 x 3 x 9 x 8 y 2 a" in table[-1]


@pytest.mark.parametrize("kind", KINDS + ("unified",))
@pytest.mark.parametrize("n", range(0, 7))
def test_bijective_with_round_trip(kind, n):
    image = set()
    for p in itertools.permutations(range(1, n + 1)):
        t = phi(kind, p)
        image.add(t.parent)
        assert phi_inverse(kind, t) == p
        if kind != "unified":
            assert bijection.transported_statistics(kind, p, t)["holds"], p
    assert len(image) == factorial(n)
    assert image == {t.parent for t in trees.enumerate_trees(n)}


@pytest.mark.parametrize("n", range(0, 7))
def test_unified_agrees_with_other_maps(n):
    for p in itertools.permutations(range(1, n + 1)):
        assert len({phi(k, p).parent for k in KINDS + ("unified",)}) == 1, p


@pytest.mark.parametrize("n", range(0, 7))
def test_incremental_weight_coherence(n):
    for p in itertools.permutations(range(1, n + 1)):
        assert bijection.weights_coherent(p)


def test_down_up_iff_even_tree():
    for n in range(0, 8):
        hits = 0
        for p in itertools.permutations(range(1, n + 1)):
            even = trees.is_even_tree(phi("updown", p))
            assert even == permstat.is_down_up(p)
            hits += even
        assert hits == permstat.lambda_recurrence_row(n)[n]


def test_nonroot_count_cannot_be_left_peak_transport():
    # At n = 2 the trees have {1, 2} even nonroot vertices while 2*leftpeak+1 takes {1, 3}:
    # no bijection can satisfy the nonroot reading, so the root is counted.
    tree_side = sorted(trees.even_nonroot_count(t) for t in trees.enumerate_trees(2))
    perm_side = sorted(2 * permstat.left_peaks(p) + 1 for p in itertools.permutations((1, 2)))
    assert tree_side == [1, 2] and perm_side == [1, 3]


def test_coherence_violation_is_reported(monkeypatch):
    broken = bijection._MapSpec(bijection.l_labeling, bijection._exterior_correspondence, "L", False)
    monkeypatch.setitem(bijection._SPECS, "leftpeak", broken)
    with pytest.raises(CoherenceError):
        for p in itertools.permutations(range(1, 5)):
            phi("leftpeak", p)


def test_unknown_map():
    with pytest.raises(ValueError):
        phi("sideways", (1,))


@settings(max_examples=100, deadline=None)
@given(st.integers(7, 10).flatmap(permutations_of), st.sampled_from(KINDS + ("unified",)))
def test_round_trip_larger(p, kind):
    assert phi_inverse(kind, phi(kind, p)) == p
