"""Substitution grammars and their formal derivative.

A grammar maps variables to polynomials.  The formal derivative ``D`` acts on a
monomial by the product rule, with ``D(z**k) = k * z**(k-1) * D(z)`` for any
integer ``k``; variables without a rule are constants.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from .poly import LaurentPoly, RhoElement, ZERO, parse_poly, var_index, VARIABLES


class Grammar:
    __slots__ = ("name", "rules", "_rule_idx")

    def __init__(self, rules: Mapping[str, LaurentPoly], name: str = "inline"):
        checked = {}
        for v, rhs in rules.items():
            var_index(v)
            if not isinstance(rhs, LaurentPoly):
                rhs = parse_poly(str(rhs))
            checked[v] = rhs
        self.name = name
        self.rules = checked
        self._rule_idx = [(var_index(v), rhs) for v, rhs in checked.items()]

    @classmethod
    def parse(cls, text: str, name: str = "inline") -> "Grammar":
        """Parse ``"x->x*y; y->x^2"``; coefficients may be rational (``v->1/2*u*v``)."""
        rules = {}
        for chunk in text.replace(",", ";").split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "->" not in chunk:
                raise ValueError(f"rule {chunk!r} lacks '->'")
            lhs, rhs = (s.strip() for s in chunk.split("->", 1))
            if lhs not in VARIABLES:
                raise ValueError(f"unknown variable {lhs!r} on left side of rule")
            if lhs in rules:
                raise ValueError(f"duplicate rule for {lhs!r}")
            rules[lhs] = parse_poly(rhs)
        if not rules:
            raise ValueError("empty grammar")
        return cls(rules, name)

    def __str__(self):
        return "; ".join(f"{v}->{rhs}" for v, rhs in self.rules.items())

    def __repr__(self):
        return f"Grammar({self.name}: {self})"


def derive(g: Grammar, f: LaurentPoly) -> LaurentPoly:
    out: dict = {}
    for m, c in f.items():
        for i, rhs in g._rule_idx:
            k = m[i]
            if not k:
                continue
            base = list(m)
            base[i] -= 1
            ck = c * k
            for rm, rc in rhs.items():
                mm = tuple(e1 + e2 for e1, e2 in zip(base, rm))
                s = out.get(mm, 0) + ck * rc
                if s:
                    out[mm] = s
                else:
                    del out[mm]
    return LaurentPoly._raw(out)


def derive_n(g: Grammar, f: LaurentPoly, n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    for _ in range(n):
        f = derive(g, f)
    return f


def derivative_chain(g: Grammar, f: LaurentPoly, n: int) -> list[LaurentPoly]:
    """``[f, D f, ..., D^n f]``."""
    chain = [f]
    for _ in range(n):
        chain.append(derive(g, chain[-1]))
    return chain


def is_constant(g: Grammar, f: LaurentPoly) -> bool:
    return derive(g, f).is_zero()


def gen_series(g: Grammar, f: LaurentPoly, order: int):
    """Truncated ``Gen(f, t)``: coefficient of ``t^n`` is ``D^n(f)/n!``."""
    from .series import Series

    chain = derivative_chain(g, f, order)
    return Series([RhoElement(d * Fraction(1, factorial(n))) for n, d in enumerate(chain)])


def _p(text):
    return parse_poly(text)


PRESETS = {
    "peak": Grammar({"x": _p("x*y"), "y": _p("x^2")}, "peak"),
    "run": Grammar({"a": _p("a*x"), "x": _p("x*y"), "y": _p("x^2")}, "run"),
    "h": Grammar({"a": _p("a*y"), "x": _p("x*y"), "y": _p("x^2")}, "h"),
    "uv": Grammar({"u": _p("v^2"), "v": _p("1/2*u*v")}, "uv"),
    "euler": Grammar({"x": _p("x*y"), "y": _p("x*y")}, "euler"),
    "andre": Grammar({"x": _p("x*y"), "y": _p("x")}, "andre"),
}

G_PEAK = PRESETS["peak"]
G_RUN = PRESETS["run"]
G_H = PRESETS["h"]
G_UV = PRESETS["uv"]
G_EULER = PRESETS["euler"]
G_ANDRE = PRESETS["andre"]


def get_grammar(spec: str) -> Grammar:
    """Preset name (case-insensitive) or ``inline:<rules>``."""
    if spec.startswith("inline:"):
        return Grammar.parse(spec[len("inline:"):])
    try:
        return PRESETS[spec.lower()]
    except KeyError:
        raise ValueError(f"unknown grammar {spec!r}; presets: {sorted(PRESETS)}") from None
