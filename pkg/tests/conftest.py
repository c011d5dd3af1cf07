from fractions import Fraction

import pytest
from hypothesis import strategies as st

from permgrammar.poly import LaurentPoly

ACCEPTANCE_LINES: list[str] = []

small_coeff = st.one_of(
    st.integers(-5, 5),
    st.builds(Fraction, st.integers(-4, 4), st.integers(1, 4)),
)


@st.composite
def monomials(draw, names=("a", "x", "y"), lo=-2, hi=3, coeff=False):
    exps = {n: draw(st.integers(lo, hi)) for n in names}
    c = draw(small_coeff.filter(bool)) if coeff else 1
    return LaurentPoly.mono(c, **exps)


@st.composite
def polys(draw, names=("a", "x", "y"), max_terms=4, lo=-2, hi=3):
    n = draw(st.integers(0, max_terms))
    total = LaurentPoly()
    for _ in range(n):
        total = total + draw(monomials(names, lo, hi, coeff=True))
    return total


def permutations_of(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)


any_permutation = st.integers(0, 8).flatmap(permutations_of)


def record_acceptance(line: str):
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance():
    return record_acceptance
