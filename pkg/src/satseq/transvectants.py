"""Transvectants and covariants of the generic binary form.

Covariants are stored with raw monomial coefficients.  The binomial weights
of the generic form only appear in :func:`generic_form` and
:func:`specialize`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Sequence

from .poly import ANY, Poly, Universe, bidegree, derivative, embed, substitute


@dataclass(frozen=True)
class Covariant:
    """Bihomogeneous polynomial in a0..ad; x1, x2 with declared degree/order.

    A vanishing covariant keeps its (degree, order) slot with ``body == 0``.
    """

    d: int
    body: Poly
    degree: int
    order: int

    def __post_init__(self):
        bd = bidegree(self.body)
        if bd is None or (bd is not ANY and bd != (self.degree, self.order)):
            raise ValueError(f"body has bidegree {bd}, declared ({self.degree}, {self.order})")

    @property
    def universe(self) -> Universe:
        return self.body.universe

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def __add__(self, other: "Covariant") -> "Covariant":
        _same_slot(self, other)
        return Covariant(self.d, self.body + other.body, self.degree, self.order)

    def __sub__(self, other: "Covariant") -> "Covariant":
        _same_slot(self, other)
        return Covariant(self.d, self.body - other.body, self.degree, self.order)

    def scale(self, c) -> "Covariant":
        return Covariant(self.d, self.body.scale(c), self.degree, self.order)

    def __mul__(self, other: "Covariant") -> "Covariant":
        if self.d != other.d:
            raise ValueError("covariants of different d")
        return Covariant(self.d, self.body * other.body,
                         self.degree + other.degree, self.order + other.order)


def _same_slot(a: Covariant, b: Covariant) -> None:
    if (a.d, a.degree, a.order) != (b.d, b.degree, b.order):
        raise ValueError(f"cannot add covariants of types {(a.degree, a.order)} and {(b.degree, b.order)}")


def zero_covariant(d: int, degree: int, order: int) -> Covariant:
    return Covariant(d, Universe.binary(d).zero(), degree, order)


def x_order(p: Poly) -> int:
    degs = p.degree_in(p.universe.x_indices)
    if len(degs) != 1:
        raise ValueError("not homogeneous in x1, x2")
    return degs.pop()


def transvectant(A: Poly, B: Poly, r: int, p: int | None = None, q: int | None = None) -> Poly:
    """(A, B)_r of two forms homogeneous in x1, x2 of orders p and q.

    Evaluates the defining sum of mixed partials literally, with the
    prefactor (p-r)!(q-r)!/(p!q!).
    """
    if r < 0:
        raise ValueError("index of transvection must be >= 0")
    if A.is_zero() or B.is_zero():
        return A.universe.zero()
    p = x_order(A) if p is None else p
    q = x_order(B) if q is None else q
    if r > min(p, q):
        return A.universe.zero()
    x1, x2 = A.universe.x_indices
    total = A.universe.zero()
    for i in range(r + 1):
        dA = derivative(A, {x1: r - i, x2: i})
        dB = derivative(B, {x1: i, x2: r - i})
        term = dA * dB
        c = comb(r, i) * (-1) ** i
        total = total + term.scale(c)
    pre = Fraction(factorial(p - r) * factorial(q - r), factorial(p) * factorial(q))
    return total.scale(pre)


def transvect(A: Covariant, B: Covariant, r: int) -> Covariant:
    if r < 0:
        raise ValueError("index of transvection must be >= 0")
    if A.d != B.d:
        raise ValueError("covariants of different d")
    degree, order = A.degree + B.degree, A.order + B.order - 2 * r
    if r > min(A.order, B.order) or A.is_zero() or B.is_zero():
        return Covariant(A.d, A.universe.zero(), degree, order)
    body = transvectant(A.body, B.body, r, A.order, B.order)
    return Covariant(A.d, body, degree, order)


@lru_cache(maxsize=None)
def generic_form(d: int) -> Covariant:
    """sum_i binom(d, i) a_i x1^(d-i) x2^i."""
    U = Universe.binary(d)
    body = U.zero()
    for i in range(d + 1):
        body = body + U.monomial(comb(d, i), **{f"a{i}": 1, "x1": d - i, "x2": i})
    return Covariant(d, body, 1, d)


@lru_cache(maxsize=None)
def hessian_covariant(d: int, q: int) -> Covariant:
    """(F, F)_{2q}: degree 2, order 2d - 4q."""
    if not 1 <= q <= d // 2:
        raise ValueError(f"q={q} outside 1..{d // 2}")
    F = generic_form(d)
    return transvect(F, F, 2 * q)


def is_admissible(d: int, a: int, b: int) -> bool:
    return 0 <= a <= d and 0 <= b <= d and a % 2 == 0 and 2 * a + b <= 2 * d


@lru_cache(maxsize=None)
def cubic_covariant(d: int, a: int, b: int) -> Covariant:
    """((F, F)_a, F)_b, the zero covariant whenever the pair is not admissible."""
    order = 3 * d - 2 * (a + b)
    if not is_admissible(d, a, b):
        return zero_covariant(d, 3, order)
    F = generic_form(d)
    return transvect(transvect(F, F, a), F, b)


def specialize(C: Covariant, coeffs: Sequence) -> Covariant:
    """Substitute a concrete binary form for F.

    ``coeffs[i]`` is the coefficient of x1^(d-i) x2^i in the target form, so
    a_i receives coeffs[i] / binom(d, i).
    """
    d = C.d
    if len(coeffs) != d + 1:
        raise ValueError(f"need {d + 1} coefficients, got {len(coeffs)}")
    U = C.universe
    bindings = {f"a{i}": U.const(Fraction(coeffs[i]) / comb(d, i)) for i in range(d + 1)}
    return Covariant(d, substitute(C.body, bindings), 0, C.order)


@lru_cache(maxsize=None)
def a_universe(d: int) -> Universe:
    return Universe(tuple(f"a{i}" for i in range(d + 1)))


def coefficient_list(C: Covariant) -> List[Poly]:
    """[phi_0, ..., phi_n] with C = sum_j phi_j x1^(n-j) x2^j, phi_j in a0..ad."""
    n, d = C.order, C.d
    A = a_universe(d)
    buckets: List[Dict] = [dict() for _ in range(n + 1)]
    for e, c in C.body.terms.items():
        j = e[d + 2]
        buckets[j][e[: d + 1]] = c
    return [Poly(A, b) for b in buckets]


def apply_sl2(C: Covariant, g) -> Covariant:
    """Act by g in SL_2(Q): x -> g x, and a -> a* with F(a*, g x) = F(a, x).

    On a specialized (a-free) form this is plain substitution
    x1 -> g11 x1 + g12 x2, x2 -> g21 x1 + g22 x2.  Covariants of F are
    fixed by the combined action.
    """
    (g11, g12), (g21, g22) = [[Fraction(v) for v in row] for row in g]
    if g11 * g22 - g12 * g21 != 1:
        raise ValueError("g must have determinant 1")
    d, U = C.d, C.universe
    x1, x2 = U.var("x1"), U.var("x2")
    bindings = {"x1": x1.scale(g11) + x2.scale(g12), "x2": x1.scale(g21) + x2.scale(g22)}
    if C.degree > 0:
        # a* = coefficients of F(a, g^{-1} x), binomial weights divided out
        inv = {"x1": x1.scale(g22) - x2.scale(g12), "x2": x2.scale(g11) - x1.scale(g21)}
        F_inv = Covariant(d, substitute(generic_form(d).body, inv), 1, d)
        coeffs = coefficient_list(F_inv)
        for i in range(d + 1):
            bindings[f"a{i}"] = embed(coeffs[i], U).scale(Fraction(1, comb(d, i)))
    return Covariant(d, substitute(C.body, bindings), C.degree, C.order)


def binary_form(d: int, coeffs: Sequence) -> Covariant:
    """The a-free form sum_i coeffs[i] x1^(d-i) x2^i (order d, degree 0)."""
    U = Universe.binary(d)
    body = U.zero()
    for i, c in enumerate(coeffs):
        if c:
            body = body + U.monomial(Fraction(c), x1=d - i, x2=i)
    return Covariant(d, body, 0, d)


# -- compound transvectant expressions -------------------------------------

_TOKEN = re.compile(r"\s*(H\d+|F|\{|\}|\(|\)_|\(|\)|,|\*|\^|\d+)")


class ExpressionError(ValueError):
    pass


def evaluate(expr: str, d: int) -> Covariant:
    """Evaluate a compound transvectant expression in the generic d-ic.

    Grammar::

        product := power ('*' power)*
        power   := atom ('^' int)?
        atom    := 'F' | 'H'int | '{' int ',' int '}' | '(' product ',' product ')_' int

    ``H2q`` is (F, F)_{2q}; ``{a,b}`` is ((F, F)_a, F)_b.
    """
    tokens = []
    pos = 0
    text = expr.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"unexpected input at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    stream = iter(tokens + [None])
    state = {"tok": next(stream)}

    def peek():
        return state["tok"]

    def take(expected=None):
        tok = state["tok"]
        if expected is not None and tok != expected:
            raise ExpressionError(f"expected {expected!r}, got {tok!r}")
        state["tok"] = next(stream)
        return tok

    def integer():
        tok = take()
        if tok is None or not tok.isdigit():
            raise ExpressionError(f"expected integer, got {tok!r}")
        return int(tok)

    def atom() -> Covariant:
        tok = peek()
        if tok == "F":
            take()
            return generic_form(d)
        if tok and tok.startswith("H"):
            take()
            k = int(tok[1:])
            if k % 2:
                raise ExpressionError("H index must be even")
            return hessian_covariant(d, k // 2)
        if tok == "{":
            take()
            a = integer()
            take(",")
            b = integer()
            take("}")
            return cubic_covariant(d, a, b)
        if tok == "(":
            take()
            A = product()
            take(",")
            B = product()
            take(")_")
            return transvect(A, B, integer())
        raise ExpressionError(f"unexpected token {tok!r}")

    def power() -> Covariant:
        base = atom()
        if peek() == "^":
            take()
            k = integer()
            if k == 0:
                return Covariant(d, base.universe.const(1), 0, 0)
            out = base
            for _ in range(k - 1):
                out = out * base
            return out
        return base

    def product() -> Covariant:
        out = power()
        while peek() == "*":
            take()
            out = out * power()
        return out

    result = product()
    if peek() is not None:
        raise ExpressionError(f"trailing input {peek()!r}")
    return result
