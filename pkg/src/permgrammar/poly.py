"""Exact sparse Laurent polynomials over Q and the quadratic extension by rho.

Polynomials live in the fixed alphabet ``a, x, y, u, v``.  A monomial is an
exponent tuple of length five (negative entries allowed); a polynomial is a
mapping from monomials to nonzero :class:`fractions.Fraction` coefficients.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Iterable, Mapping

VARIABLES = ("a", "x", "y", "u", "v")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
ONE_EXP = (0,) * _NVARS

Monomial = tuple  # exponent tuple indexed like VARIABLES


def var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; alphabet is {VARIABLES}") from None


def monomial(**exps: int) -> Monomial:
    """Exponent tuple from keyword exponents, e.g. ``monomial(a=1, x=3, y=1)``."""
    out = [0] * _NVARS
    for name, e in exps.items():
        out[var_index(name)] = int(e)
    return tuple(out)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(c)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != _NVARS:
                    raise ValueError(f"monomial {m!r} must have {_NVARS} exponents")
                c = _as_fraction(c)
                if c:
                    m = tuple(int(e) for e in m)
                    clean[m] = clean.get(m, 0) + c
                    if not clean[m]:
                        del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # trusted constructor: caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({ONE_EXP: c})

    @classmethod
    def var(cls, name: str) -> "LaurentPoly":
        return cls({monomial(**{name: 1}): 1})

    @classmethod
    def mono(cls, coeff=1, **exps: int) -> "LaurentPoly":
        return cls({monomial(**exps): coeff})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return parse_poly(text)

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, m: Monomial) -> Fraction:
        if isinstance(m, LaurentPoly):
            if not m.is_monomial():
                raise ValueError("coefficient lookup needs a single monomial")
            (m,) = m._terms
        return self._terms.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_EXP, Fraction(0))

    def variables(self) -> set[str]:
        used = set()
        for m in self._terms:
            used.update(VARIABLES[i] for i, e in enumerate(m) if e)
        return used

    def degree_in(self, name: str) -> int:
        i = var_index(name)
        return max((m[i] for m in self._terms), default=0)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def inverse(self) -> "LaurentPoly":
        """Inverse of a single monomial with nonzero coefficient."""
        if not self.is_monomial():
            raise ValueError("not invertible: only single monomials have Laurent inverses")
        ((m, c),) = self._terms.items()
        return LaurentPoly._raw({tuple(-e for e in m): 1 / c})

    def __pow__(self, k: int):
        return poly_pow(self, k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def subs(self, **values) -> "LaurentPoly":
        """Substitute variables by rationals or polynomials."""
        result = LaurentPoly()
        repl = {var_index(k): (v if isinstance(v, LaurentPoly) else LaurentPoly.const(v))
                for k, v in values.items()}
        for m, c in self._terms.items():
            rest = list(m)
            term = LaurentPoly.const(c)
            for i, val in repl.items():
                if rest[i]:
                    term = term * poly_pow(val, rest[i])
                    rest[i] = 0
            result = result + term * LaurentPoly._raw({tuple(rest): Fraction(1)})
        return result

    def rename(self, src: str, dst: str) -> "LaurentPoly":
        i, j = var_index(src), var_index(dst)
        out = {}
        for m, c in self._terms.items():
            m2 = list(m)
            m2[j] += m2[i]
            m2[i] = 0
            m2 = tuple(m2)
            out[m2] = out.get(m2, 0) + c
        return LaurentPoly(out)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda mc: _order_key(mc[0]))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"


def _order_key(m: Monomial):
    # graded lexicographic on (a, x, y, u, v)
    return (sum(m), m)


def poly_arith(kind: str, p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def poly_pow(p: LaurentPoly, k: int) -> LaurentPoly:
    k = int(k)
    if k < 0:
        return poly_pow(p.inverse(), -k)
    result = LaurentPoly.const(1)
    base = p
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def coefficient_of(p: LaurentPoly, m) -> Fraction:
    return p.coefficient(m)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Render as e.g. ``a*x*y^3 + 7*a*x^2*y^2 - 1/2*x^-1``."""
    if p.is_zero():
        return "0"
    chunks = []
    for m, c in p.sorted_terms():
        sign = "-" if c < 0 else "+"
        c = abs(c)
        body = format_monomial(m)
        if not body:
            text = _format_coeff(c)
        elif c == 1:
            text = body
        else:
            text = f"{_format_coeff(c)}*{body}"
        chunks.append((sign, text))
    first_sign, first = chunks[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in chunks[1:]:
        out += f" {sign} {text}"
    return out


_BINOPS = {ast.Add: "add", ast.Sub: "sub", ast.Mult: "mul", ast.Div: "div", ast.Pow: "pow"}


def parse_poly(text: str) -> LaurentPoly:
    """Parse the rendering produced by :func:`format_poly` (``^`` for powers)."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc.msg}") from None
    return _eval_node(tree.body, text)


def _eval_node(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return LaurentPoly.const(node.value)
    if isinstance(node, ast.Name):
        return LaurentPoly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval_node(node.operand, text)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        op = _BINOPS[type(node.op)]
        left = _eval_node(node.left, text)
        if op == "pow":
            exp = _eval_node(node.right, text)
            if not (exp.is_zero() or (exp.is_monomial() and ONE_EXP in exp._terms)):
                raise ValueError(f"exponent must be an integer in {text!r}")
            k = exp.constant_term()
            if k.denominator != 1:
                raise ValueError(f"exponent must be an integer in {text!r}")
            return poly_pow(left, int(k))
        right = _eval_node(node.right, text)
        if op == "add":
            return left + right
        if op == "sub":
            return left - right
        if op == "mul":
            return left * right
        return left * right.inverse()
    raise ValueError(f"unsupported syntax in polynomial {text!r}")


X = LaurentPoly.var("x")
Y = LaurentPoly.var("y")
A = LaurentPoly.var("a")
U = LaurentPoly.var("u")
V = LaurentPoly.var("v")
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()
RHO_SQ_DEFAULT = Y * Y - X * X


class RhoElement:
    """``p + q*rho`` with ``rho**2 == rho_sq`` (default ``y^2 - x^2``)."""

    __slots__ = ("p", "q", "rho_sq")

    def __init__(self, p=ZERO, q=ZERO, rho_sq: LaurentPoly = RHO_SQ_DEFAULT):
        self.p = p if isinstance(p, LaurentPoly) else LaurentPoly.const(p)
        self.q = q if isinstance(q, LaurentPoly) else LaurentPoly.const(q)
        self.rho_sq = rho_sq

    def _check(self, other: "RhoElement"):
        if self.rho_sq is not other.rho_sq and self.rho_sq != other.rho_sq:
            raise ValueError("RhoElements over different rho^2 cannot be combined")

    def _lift(self, other):
        if isinstance(other, RhoElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RhoElement(other, ZERO, self.rho_sq)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RhoElement(self.p + other.p, self.q + other.q, self.rho_sq)

    __radd__ = __add__

    def __neg__(self):
        return RhoElement(-self.p, -self.q, self.rho_sq)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RhoElement(self.p - other.p, self.q - other.q, self.rho_sq)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RhoElement(self.p * other, self.q * other, self.rho_sq)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.p * other.p
        if self.q and other.q:
            p = p + self.q * other.q * self.rho_sq
        q = self.p * other.q + self.q * other.p
        return RhoElement(p, q, self.rho_sq)

    __rmul__ = __mul__

    def conjugate(self) -> "RhoElement":
        return RhoElement(self.p, -self.q, self.rho_sq)

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.q.is_zero() and self.p == other
        if not isinstance(other, RhoElement):
            return NotImplemented
        return self.p == other.p and self.q == other.q and self.rho_sq == other.rho_sq

    def __hash__(self):
        return hash((self.p, self.q))

    def subs(self, **values) -> "RhoElement":
        return RhoElement(self.p.subs(**values), self.q.subs(**values), self.rho_sq.subs(**values))

    def __str__(self):
        if self.q.is_zero():
            return format_poly(self.p)
        return f"({format_poly(self.p)}) + ({format_poly(self.q)})*rho"

    def __repr__(self):
        return f"RhoElement({self})"


def rho_mul(e1: RhoElement, e2: RhoElement) -> RhoElement:
    return e1 * e2


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    total = ZERO
    for p in polys:
        total = total + p
    return total


def poly_to_json(p: LaurentPoly) -> list[dict]:
    """Terms in canonical order; coefficients as numerator/denominator strings."""
    return [
        {
            "exponents": {name: e for name, e in zip(VARIABLES, m) if e},
            "num": str(c.numerator),
            "den": str(c.denominator),
        }
        for m, c in p.sorted_terms()
    ]


def poly_from_json(data: list[dict]) -> LaurentPoly:
    return LaurentPoly({monomial(**t["exponents"]): Fraction(int(t["num"]), int(t["den"]))
                        for t in data})
