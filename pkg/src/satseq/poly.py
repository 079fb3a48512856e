"""Exact sparse multivariate polynomials over the rationals.

A polynomial lives in a fixed :class:`Universe` of named variables and is
stored as a dict mapping dense exponent tuples to nonzero ``Fraction``
coefficients.  Zero is the empty dict.  Values are treated as immutable:
every operation returns a new polynomial.

Variables whose names start with ``x`` are the form variables x1, x2; all
others count towards the "a-degree".  This split drives :func:`bidegree`.

Canonical text form (used by the CLI and fixtures)::

    3/2*a0*a2^2*x1^4 + -1/1*a1^2 + 5/1

Terms are sorted degree-then-lexicographically (highest first), every
coefficient is written ``num/den`` and the zero polynomial is ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb, factorial
from typing import Dict, Iterable, Mapping, Tuple, Union

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class UniverseMismatch(ValueError):
    """Raised when polynomials from different universes are combined."""


@dataclass(frozen=True)
class Universe:
    names: Tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @classmethod
    def binary(cls, d: int) -> "Universe":
        """a0..ad, x1, x2 -- the ring holding covariants of a binary d-ic."""
        if d < 1:
            raise ValueError("d must be >= 1")
        return cls(tuple(f"a{i}" for i in range(d + 1)) + ("x1", "x2"))

    @classmethod
    def of(cls, *names: str) -> "Universe":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in universe {self.names}") from None

    @cached_property
    def x_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, n in enumerate(self.names) if n.startswith("x"))

    @cached_property
    def a_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, n in enumerate(self.names) if not n.startswith("x"))

    def var(self, name: str) -> "Poly":
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): Fraction(1)})

    def const(self, c: Scalar) -> "Poly":
        return Poly(self, {(0,) * len(self.names): Fraction(c)})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def monomial(self, coeff: Scalar, **powers: int) -> "Poly":
        e = [0] * len(self.names)
        for name, k in powers.items():
            e[self.index(name)] = k
        return Poly(self, {tuple(e): Fraction(coeff)})


class _AnyBidegree:
    """Wildcard bidegree of the zero polynomial: compares equal to any pair."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, (tuple, _AnyBidegree))

    def __hash__(self):
        return 0

    def __repr__(self):
        return "ANY"


ANY = _AnyBidegree()


def _add_exp(e1: Exponent, e2: Exponent) -> Exponent:
    return tuple([a + b for a, b in zip(e1, e2)])


class Poly:
    """Sparse polynomial with Fraction coefficients in a fixed universe."""

    __slots__ = ("universe", "terms")

    def __init__(self, universe: Universe, terms: Mapping[Exponent, Scalar] | None = None):
        self.universe = universe
        n = len(universe.names)
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n:
                    raise ValueError(f"exponent {e} has wrong length for {universe.names}")
                if c:
                    clean[e] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean

    @classmethod
    def _raw(cls, universe: Universe, terms: Dict[Exponent, Fraction]) -> "Poly":
        # caller guarantees canonical terms (no zeros, Fraction values)
        p = object.__new__(cls)
        p.universe = universe
        p.terms = terms
        return p

    # -- basic protocol -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.universe == other.universe and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.universe.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.universe, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Poly({serialize(self)})"

    def _check(self, other: "Poly") -> None:
        if self.universe != other.universe:
            raise UniverseMismatch(f"{self.universe.names} vs {other.universe.names}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.universe.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(self.universe, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.universe, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly._raw(self.universe, {})
        return Poly._raw(self.universe, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exponent, Fraction] = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                v = get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._raw(self.universe, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = self.universe.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structure ------------------------------------------------------

    def degree_in(self, indices: Iterable[int]) -> set:
        idx = tuple(indices)
        return {sum(e[i] for i in idx) for e in self.terms}

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def denominator_lcm(self) -> int:
        from math import lcm

        out = 1
        for c in self.terms.values():
            out = lcm(out, c.denominator)
        return out


# -- operations -----------------------------------------------------------


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def partial_derivative(p: Poly, var: str | int, k: int = 1) -> Poly:
    """k-th partial derivative of ``p`` with respect to one variable."""
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    i = var if isinstance(var, int) else p.universe.index(var)
    if k == 0:
        return p
    out: Dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        n = e[i]
        if n < k:
            continue
        falling = factorial(n) // factorial(n - k)
        e2 = e[:i] + (n - k,) + e[i + 1:]
        out[e2] = c * falling
    return Poly._raw(p.universe, out)


def derivative(p: Poly, orders: Mapping[str | int, int]) -> Poly:
    """Mixed partial derivative, e.g. ``derivative(p, {"x1": 2, "x2": 1})``."""
    for var, k in orders.items():
        p = partial_derivative(p, var, k)
    return p


def substitute(p: Poly, bindings: Mapping[str, Poly], target: Universe | None = None) -> Poly:
    """Simultaneous substitution of variables by polynomials.

    Unbound variables are carried over by name into ``target`` (which
    defaults to ``p.universe``).  All bound images must live in ``target``.
    """
    target = target or p.universe
    src = p.universe
    bound = {src.index(name): img for name, img in bindings.items()}
    for img in bound.values():
        if img.universe != target:
            raise UniverseMismatch("substitution image lives in a different universe")
    carry = {}
    for i, name in enumerate(src.names):
        if i not in bound:
            carry[i] = target.index(name)
    ntarget = len(target.names)
    # cache powers of each image
    powers: Dict[Tuple[int, int], Poly] = {}

    def power(i: int, k: int) -> Poly:
        key = (i, k)
        if key not in powers:
            powers[key] = target.const(1) if k == 0 else power(i, k - 1) * bound[i]
        return powers[key]

    result: Dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        base = [0] * ntarget
        for i, j in carry.items():
            base[j] += e[i]
        term = Poly._raw(target, {tuple(base): c})
        for i, k in enumerate(e):
            if k and i in bound:
                term = term * power(i, k)
        for e2, c2 in term.terms.items():
            v = result.get(e2, 0) + c2
            if v:
                result[e2] = v
            else:
                result.pop(e2, None)
    return Poly._raw(target, result)


def bidegree(p: Poly):
    """(a-degree, x-degree) if every term shares it, ``ANY`` for zero, else None."""
    if p.is_zero():
        return ANY
    a_idx, x_idx = p.universe.a_indices, p.universe.x_indices
    pairs = {(sum(e[i] for i in a_idx), sum(e[i] for i in x_idx)) for e in p.terms}
    if len(pairs) == 1:
        return pairs.pop()
    return None


def embed(p: Poly, target: Universe) -> Poly:
    """Re-home ``p`` in a universe containing all of its (used) variables."""
    src = p.universe
    mapping = []
    for i, name in enumerate(src.names):
        mapping.append(target.index(name) if name in target._index else None)
    out: Dict[Exponent, Fraction] = {}
    n = len(target.names)
    for e, c in p.terms.items():
        t = [0] * n
        for i, k in enumerate(e):
            if k:
                j = mapping[i]
                if j is None:
                    raise UniverseMismatch(f"variable {src.names[i]} not in target universe")
                t[j] += k
        out[tuple(t)] = c
    return Poly._raw(target, out)


# -- canonical text form --------------------------------------------------


def _fmt_coeff(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def serialize(p: Poly) -> str:
    if p.is_zero():
        return "0"
    names = p.universe.names
    parts = []
    for e, c in p.sorted_terms():
        factors = [_fmt_coeff(c)]
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        parts.append("*".join(factors))
    return " + ".join(parts)


def parse(text: str, universe: Universe) -> Poly:
    """Inverse of :func:`serialize` (also accepts integer coefficients)."""
    text = text.strip()
    if text == "0":
        return universe.zero()
    n = len(universe.names)
    out: Dict[Exponent, Fraction] = {}
    for chunk in text.split(" + "):
        factors = chunk.strip().split("*")
        coeff = Fraction(factors[0])
        e = [0] * n
        for f in factors[1:]:
            name, _, k = f.partition("^")
            e[universe.index(name)] += int(k) if k else 1
        key = tuple(e)
        out[key] = out.get(key, Fraction(0)) + coeff
    return Poly(universe, out)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient that is 0 outside 0 <= k <= n (also for n < 0)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
