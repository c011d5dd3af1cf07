"""Truncated power series in t over RhoElement coefficients.

The hyperbolic closed forms are assembled from two rho-free kernels

    C(t) = sum rho2^n t^(2n) / (2n)!        (= cosh(rho t))
    S(t) = sum rho2^n t^(2n+1) / (2n+1)!    (= sinh(rho t) / rho)

so that most formulas have plain polynomial coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .poly import (
    RHO_SQ_DEFAULT,
    LaurentPoly,
    RhoElement,
    ONE,
    ZERO,
    X,
    Y,
    A,
    format_poly,
    poly_to_json,
)


class Series:
    __slots__ = ("coeffs", "rho_sq")

    def __init__(self, coeffs: Sequence, rho_sq: LaurentPoly | None = None):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        if rho_sq is None:
            rho_sq = next((c.rho_sq for c in coeffs if isinstance(c, RhoElement)), RHO_SQ_DEFAULT)
        self.rho_sq = rho_sq
        self.coeffs = tuple(c if isinstance(c, RhoElement) else RhoElement(c, ZERO, rho_sq)
                            for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int, rho_sq: LaurentPoly = RHO_SQ_DEFAULT) -> "Series":
        z = RhoElement(ZERO, ZERO, rho_sq)
        return cls([RhoElement(c, ZERO, rho_sq)] + [z] * order, rho_sq)

    @classmethod
    def from_egf(cls, polys: Sequence[LaurentPoly], rho_sq: LaurentPoly = RHO_SQ_DEFAULT) -> "Series":
        """``sum polys[n] t^n / n!``."""
        return cls([RhoElement(p * Fraction(1, factorial(n)), ZERO, rho_sq)
                    for n, p in enumerate(polys)], rho_sq)

    def __getitem__(self, n: int) -> RhoElement:
        return self.coeffs[n]

    def egf_coefficient(self, n: int) -> RhoElement:
        """``n!`` times the coefficient of ``t^n``."""
        return self.coeffs[n] * factorial(n)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], self.rho_sq)

    def _same_order(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, Series):
            return Series([self.coeffs[0] + other] + list(self.coeffs[1:]), self.rho_sq)
        self._same_order(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.rho_sq)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.rho_sq)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs], self.rho_sq)
        self._same_order(other)
        n = self.order
        out = []
        for k in range(n + 1):
            acc = RhoElement(ZERO, ZERO, self.rho_sq)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return Series(out, self.rho_sq)

    __rmul__ = __mul__

    def ddt(self) -> "Series":
        if self.order == 0:
            raise ValueError("derivative of an order-0 series has no coefficients")
        return Series([self.coeffs[n] * n for n in range(1, self.order + 1)], self.rho_sq)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def first_difference(self, other: "Series"):
        """Index of the first differing coefficient, or ``None``."""
        self._same_order(other)
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n
        return None

    def subs(self, **values) -> "Series":
        coeffs = [c.subs(**values) for c in self.coeffs]
        return Series(coeffs, coeffs[0].rho_sq)

    def pairs(self) -> list[tuple[int, str]]:
        return [(n, str(c)) for n, c in enumerate(self.coeffs)]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "rho_squared": poly_to_json(self.rho_sq),
            "coefficients": [
                {"n": n, "p": poly_to_json(c.p), "q": poly_to_json(c.q)}
                for n, c in enumerate(self.coeffs)
            ],
        }

    def __str__(self):
        return "\n".join(f"{n}: {c}" for n, c in self.pairs())

    def __repr__(self):
        return f"Series(order={self.order})"


def series_arith(kind: str, s1: Series, s2: Series | None = None) -> Series:
    if kind == "add":
        return s1 + s2
    if kind == "mul":
        return s1 * s2
    if kind == "ddt":
        return s1.ddt()
    raise ValueError(f"unknown series operation {kind!r}")


def series_reciprocal(s: Series) -> Series:
    c0 = s.coeffs[0]
    if not c0.q.is_zero() or not c0.p.is_monomial():
        raise ValueError("constant term not a unit")
    inv0 = c0.p.inverse()
    out = [RhoElement(inv0, ZERO, s.rho_sq)]
    for n in range(1, s.order + 1):
        acc = RhoElement(ZERO, ZERO, s.rho_sq)
        for k in range(1, n + 1):
            if s.coeffs[k]:
                acc = acc + s.coeffs[k] * out[n - k]
        out.append(-(acc * inv0))
    return Series(out, s.rho_sq)


def series_exp(s: Series) -> Series:
    if s.coeffs[0]:
        raise ValueError("exp needs a series with zero constant term")
    # n f_n = sum_k k g_k f_{n-k}
    out = [RhoElement(ONE, ZERO, s.rho_sq)]
    for n in range(1, s.order + 1):
        acc = RhoElement(ZERO, ZERO, s.rho_sq)
        for k in range(1, n + 1):
            if s.coeffs[k]:
                acc = acc + s.coeffs[k] * out[n - k] * k
        out.append(acc * Fraction(1, n))
    return Series(out, s.rho_sq)


def hyperbolic_kernels(order: int, rho_sq: LaurentPoly = RHO_SQ_DEFAULT, scale: int = 1):
    """``(C, S)`` with ``cosh(c rho t) = C`` and ``sinh(c rho t) = rho * S`` for ``c = scale``."""
    zero = RhoElement(ZERO, ZERO, rho_sq)
    cos, sin = [zero] * (order + 1), [zero] * (order + 1)
    power = ONE
    for n in range(order + 1):
        if 2 * n <= order:
            cos[2 * n] = RhoElement(power * Fraction(scale ** (2 * n), factorial(2 * n)), ZERO, rho_sq)
        if 2 * n + 1 <= order:
            sin[2 * n + 1] = RhoElement(power * Fraction(scale ** (2 * n + 1), factorial(2 * n + 1)),
                                        ZERO, rho_sq)
        if 2 * n > order:
            break
        power = power * rho_sq
    return Series(cos, rho_sq), Series(sin, rho_sq)


def exp_rho(order: int, rho_sq: LaurentPoly = RHO_SQ_DEFAULT, scale: int = 1) -> Series:
    """``exp(scale * rho * t) = C + rho * S`` with genuine rho-parts."""
    cos, sin = hyperbolic_kernels(order, rho_sq, scale)
    return Series([RhoElement(c.p, s.p, rho_sq) for c, s in zip(cos.coeffs, sin.coeffs)], rho_sq)


def _rho(rho_sq):
    return RhoElement(ZERO, ONE, rho_sq)


def _build(name: str, order: int) -> Series:
    rho2 = RHO_SQ_DEFAULT
    xinv = X.inverse()
    if name in ("cosh_rho", "sinh_over_rho", "bg", "genx", "gen_xinv_y", "geny", "m_bivariate",
                "david_barton_bivariate"):
        cos, sin = hyperbolic_kernels(order, rho2)
        if name == "cosh_rho":
            return cos
        if name == "sinh_over_rho":
            return sin
        bg = cos * xinv - sin * (xinv * Y)
        if name == "bg":
            return bg
        genx = series_reciprocal(bg)
        if name == "genx":
            return genx
        xinv_y = cos * (xinv * Y) - sin * (xinv * rho2)
        if name == "gen_xinv_y":
            return xinv_y
        geny = genx * xinv_y
        if name == "geny":
            return geny
        if name == "m_bivariate":
            return geny + (ONE - Y)
        return (cos + sin * (ONE - Y)) * series_reciprocal(cos - sin * Y)
    if name in ("gena_num", "gena_den", "stanley_num", "stanley_den"):
        stanley = name.startswith("stanley")
        rho2 = ONE - X * X if stanley else RHO_SQ_DEFAULT
        yy = ONE if stanley else Y
        rho = _rho(rho2)
        e1 = exp_rho(order, rho2, 1)
        e2 = exp_rho(order, rho2, 2)
        if name.endswith("num"):
            lead = (ONE - X) if stanley else A * (Y - X)
            inner = e1 * (X * 2) + e2 * (rho * -1 + yy) + (rho + yy)
            return inner * lead
        # denominator: rho^2 + y*rho + (rho^2 - y*rho) e^{2 rho t}
        return e2 * (rho * (-yy) + rho2) + (rho * yy + rho2)
    if name in ("gessel", "david_barton"):
        rho2 = ONE - X
        cos, sin = hyperbolic_kernels(order, rho2)
        lser = series_reciprocal(cos - sin)
        return lser if name == "gessel" else cos * lser
    raise ValueError(f"unknown closed form {name!r}; known: {CLOSED_FORMS}")


CLOSED_FORMS = (
    "bg", "genx", "gen_xinv_y", "geny", "m_bivariate", "stanley_num", "stanley_den",
    "gena_num", "gena_den", "cosh_rho", "sinh_over_rho",
    "gessel", "david_barton", "david_barton_bivariate",
)


def closed_form(name: str, order: int) -> Series:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return _build(name, order)


def render_pairs(s: Series) -> str:
    return "\n".join(f"{n}\t{c}" for n, c in s.pairs())


__all__ = [
    "Series", "series_arith", "series_reciprocal", "series_exp", "closed_form",
    "hyperbolic_kernels", "exp_rho", "CLOSED_FORMS", "render_pairs", "format_poly",
]
