"""Gordan's cubic syzygies and the determinants built from them.

{a, b} denotes the cubic covariant ((F, F)_a, F)_b.  Two families of linear
relations among the {m, w - m} of a fixed weight w come from the general
three-form series by choosing the exponents (0, k, w - k) (weight at most d)
or (w - d, d - k, k) (weight at least d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .linalg import ResourceLimitExceeded, det_fraction
from .poly import binomial
from .transvectants import Covariant, cubic_covariant, is_admissible, transvect, zero_covariant

EXPANSION_MAX_D = 12


def _ratio(n1, k1, n2, k2, n3, k3) -> Fraction:
    num = binomial(n1, k1) * binomial(n2, k2)
    if num == 0:
        return Fraction(0)
    den = binomial(n3, k3)
    if den == 0:
        raise ZeroDivisionError(f"binom({n3},{k3}) vanishes under a nonzero numerator")
    return Fraction(num, den)


# -- the general series ----------------------------------------------------------


@dataclass(frozen=True)
class GordanParameters:
    m: int  # order of f
    n: int  # order of phi
    p: int  # order of psi
    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        if min(self.m, self.n, self.p, self.a1, self.a2, self.a3) < 0:
            raise ValueError("orders and exponents must be >= 0")
        if self.a2 + self.a3 > self.m or self.a1 + self.a3 > self.n or self.a1 + self.a2 > self.p:
            raise ValueError(f"exponents {self.exponents} exceed the orders {(self.m, self.n, self.p)}")
        if not (self.a1 == 0 or self.a2 + self.a3 == self.m):
            raise ValueError("need a1 = 0 or a2 + a3 = m")

    @property
    def exponents(self) -> Tuple[int, int, int]:
        return self.a1, self.a2, self.a3

    @property
    def weight(self) -> int:
        return self.a1 + self.a2 + self.a3


@dataclass(frozen=True)
class CompoundTerm:
    """((first, second)_inner, third)_outer with forms named f, phi, psi."""

    first: str
    second: str
    inner: int
    third: str
    outer: int

    def __str__(self) -> str:
        return f"(({self.first},{self.second})_{self.inner},{self.third})_{self.outer}"


def gordan_general(params: GordanParameters):
    """Both sides of the series as lists of (CompoundTerm, coefficient).

    The right side already carries its sign (-1)^a1.
    """
    P = params
    lhs: List[Tuple[CompoundTerm, Fraction]] = []
    rhs: List[Tuple[CompoundTerm, Fraction]] = []
    for i in range(P.a2 + 1):
        c = _ratio(P.n - P.a1 - P.a3, i, P.a2, i, P.m + P.n - 2 * P.a3 - i + 1, i)
        if c:
            lhs.append((CompoundTerm("f", "phi", P.a3 + i, "psi", P.a1 + P.a2 - i), c))
    sign = (-1) ** P.a1
    for i in range(P.a3 + 1):
        c = _ratio(P.p - P.a1 - P.a2, i, P.a3, i, P.m + P.p - 2 * P.a2 - i + 1, i)
        if c:
            rhs.append((CompoundTerm("f", "psi", P.a2 + i, "phi", P.a1 + P.a3 - i), sign * c))
    return lhs, rhs


def _evaluate_side(side, forms: Dict[str, Covariant]) -> Covariant:
    total: Optional[Covariant] = None
    for term, c in side:
        inner = transvect(forms[term.first], forms[term.second], term.inner)
        value = transvect(inner, forms[term.third], term.outer).scale(c)
        total = value if total is None else total + value
    return total


def verify_syzygy(f: Covariant, phi: Covariant, psi: Covariant, params: GordanParameters) -> bool:
    if (f.order, phi.order, psi.order) != (params.m, params.n, params.p):
        raise ValueError("form orders do not match the parameters")
    lhs, rhs = gordan_general(params)
    forms = {"f": f, "phi": phi, "psi": psi}
    left, right = _evaluate_side(lhs, forms), _evaluate_side(rhs, forms)
    if left is None or right is None:
        # an empty side is the zero covariant
        other = right if left is None else left
        return other is None or other.is_zero()
    return (left - right).is_zero()


# -- the two specialized families --------------------------------------------------


def lower_syzygy_coefficient(d: int, k: int, w: int, m: int) -> Fraction:
    """Coefficient of {m, w-m} in the weight-w syzygy with exponents (0, k, w-k)."""
    if not (0 <= w <= d and 0 <= k and 2 * k < w and k <= m <= w):
        raise ValueError(f"(d,k,w,m)=({d},{k},{w},{m}) out of range")
    main = _ratio(d - k, m - k, w - k, m - k, 2 * d - k - m + 1, m - k)
    if m < w - k:
        return main
    return main - _ratio(d - w + k, m - w + k, k, m - w + k, 2 * d - w + k - m + 1, m - w + k)


def upper_syzygy_coefficient(d: int, k: int, w: int, m: int) -> Fraction:
    """Coefficient of {m, w-m} in the weight-w syzygy with exponents (w-d, d-k, k)."""
    if not (d <= w and 2 * w <= 3 * d and w - d <= k and 2 * k <= d and k <= m <= 2 * d - w):
        raise ValueError(f"(d,k,w,m)=({d},{k},{w},{m}) out of range")
    main = _ratio(2 * d - w - k, m - k, d - k, m - k, 2 * d - k - m + 1, m - k)
    if m < d - k:
        return main
    sign = (-1) ** (w + d + 1)
    return main + sign * _ratio(d - w + k, m - d + k, k, m - d + k, d - m + k + 1, m - d + k)


@dataclass(frozen=True)
class SyzygyCombination:
    d: int
    weight: int
    terms: Tuple[Tuple[Tuple[int, int], Fraction], ...]

    def __post_init__(self):
        for (a, b), _ in self.terms:
            if a + b != self.weight:
                raise ValueError(f"pair {(a, b)} does not have weight {self.weight}")

    def coefficient(self, a: int) -> Fraction:
        for (x, _), c in self.terms:
            if x == a:
                return c
        return Fraction(0)

    def even_terms(self):
        """Odd first indices give ((F,F)_odd, F) = 0 and drop out."""
        return tuple(t for t in self.terms if t[0][0] % 2 == 0)

    def with_coefficient(self, a: int, c) -> "SyzygyCombination":
        terms = [((x, y), Fraction(c) if x == a else v) for (x, y), v in self.terms]
        if all(x != a for (x, _), _ in self.terms):
            terms.append(((a, self.weight - a), Fraction(c)))
        return SyzygyCombination(self.d, self.weight, tuple(terms))

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "weight": self.weight,
            "terms": [{"pair": [a, b], "coefficient": f"{c.numerator}/{c.denominator}"}
                      for (a, b), c in self.terms],
        }


def gordan_lower(d: int, k: int, w: int) -> SyzygyCombination:
    terms = tuple(((m, w - m), lower_syzygy_coefficient(d, k, w, m)) for m in range(k, w + 1))
    return SyzygyCombination(d, w, terms)


def gordan_upper(d: int, k: int, w: int) -> SyzygyCombination:
    terms = tuple(((m, w - m), upper_syzygy_coefficient(d, k, w, m)) for m in range(k, 2 * d - w + 1))
    return SyzygyCombination(d, w, terms)


def lower_parameters(d: int) -> List[Tuple[int, int]]:
    return [(k, w) for w in range(d + 1) for k in range(w) if 2 * k < w]


def upper_parameters(d: int) -> List[Tuple[int, int]]:
    return [(k, w) for w in range(d, 3 * d // 2 + 1) for k in range(w - d, d // 2 + 1)]


def expand(d: int, combo: SyzygyCombination) -> Covariant:
    if d > EXPANSION_MAX_D:
        raise ResourceLimitExceeded(f"symbolic expansion limited to d <= {EXPANSION_MAX_D}")
    total = zero_covariant(d, 3, 3 * d - 2 * combo.weight)
    for (a, b), c in combo.even_terms():
        if c:
            total = total + cubic_covariant(d, a, b).scale(c)
    return total


def expand_to_zero(d: int, combo: SyzygyCombination) -> bool:
    return expand(d, combo).is_zero()


def eliminate(first: SyzygyCombination, second: SyzygyCombination, a: int) -> SyzygyCombination:
    """The combination of two syzygies in which {a, w - a} cancels."""
    if first.weight != second.weight or first.d != second.d:
        raise ValueError("syzygies of different weight or degree")
    c1, c2 = first.coefficient(a), second.coefficient(a)
    if c1 == 0 and c2 == 0:
        return first
    coeffs: Dict[int, Fraction] = {}
    for combo, scale in ((first, c2), (second, -c1)):
        for (x, _), v in combo.terms:
            coeffs[x] = coeffs.get(x, Fraction(0)) + scale * v
    terms = tuple(((x, first.weight - x), v) for x, v in sorted(coeffs.items()) if x != a and v)
    return SyzygyCombination(first.d, first.weight, terms)


# -- positions and determinants --------------------------------------------------


def position(d: int, a: int, b: int) -> int:
    """Number of admissible pairs (a', w - a') with a' >= a, w = a + b."""
    if not is_admissible(d, a, b):
        raise ValueError(f"({a},{b}) is not admissible for d={d}")
    w = a + b
    top = min(d, w, 2 * d - w)
    return sum(1 for x in range(a, top + 1) if x % 2 == 0 and is_admissible(d, x, w - x))


def t_range(d: int, s: int) -> range:
    """t indexes {2(n-s+1), t}; its maximum is the order of that Hessian."""
    return range(0, (4 * s - 4 if d % 2 == 0 else 4 * s - 2) + 1)


def build_matrix(d: int, s: int, t: int, require_bound: bool = True) -> List[List[Fraction]]:
    """Coefficients of the p rightmost terms of weight w in p syzygies.

    Rows are syzygies, columns the pairs {2m, w - 2m} for m = a/2 .. a/2+p-1,
    with a = 2(n - s + 1) and w = a + t.  Below d = 4s - 2 the matrix is still
    built when every index stays in range, if ``require_bound`` is off.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if require_bound and d < 4 * s - 2:
        raise ValueError(f"d={d} < 4s-2={4 * s - 2}")
    if t not in t_range(d, s):
        raise ValueError(f"t={t} outside {t_range(d, s)}")
    n = d // 2
    a = 2 * (n - s + 1)
    if a < 2:
        raise ValueError(f"no Hessian index for s={s}, d={d}")
    w = a + t
    p = position(d, a, t)
    cols = range(a // 2, a // 2 + p)
    if w <= d:
        rows = range(1, p + 1)
        return [[lower_syzygy_coefficient(d, k, w, 2 * m) for m in cols] for k in rows]
    rows = range(w - d, w - d + p)
    return [[upper_syzygy_coefficient(d, k, w, 2 * m) for m in cols] for k in rows]


def elimination_determinant(d: int, s: int, t: int, parity: Optional[str] = None,
                            require_bound: bool = True) -> Fraction:
    """det of the matrix above; 1 for an empty matrix."""
    if parity is not None and parity != ("even" if d % 2 == 0 else "odd"):
        raise ValueError(f"parity {parity!r} does not match d={d}")
    M = build_matrix(d, s, t, require_bound)
    return det_fraction(M) if M else Fraction(1)


def delta6_closed_form(d: int) -> Fraction:
    num = 3780 * (d - 4) * (d - 5) * (d - 6) * (d + 7) * (d * d + 3 * d + 10)
    den = (d - 1) ** 2 * (d - 2) * (d + 2) * (d + 1) ** 2 * d * d * (d + 3)
    return Fraction(num, den)


def threshold_lower_limit(s: int) -> int:
    """Smallest d where alpha_{e_d - s} exists and the matrices are defined."""
    return max(4 * s - 2, 2 * s + 2)


@dataclass
class ThresholdResult:
    s: int
    d_max: int
    threshold: int
    vanishing: List[Tuple[int, int]]  # (d, t) with zero determinant

    def as_dict(self) -> dict:
        return {"s": self.s, "d_max": self.d_max, "threshold": self.threshold,
                "vanishing": [list(v) for v in self.vanishing]}


def threshold_search(s: int, d_max: int) -> ThresholdResult:
    """Least N with every determinant nonzero for N <= d <= d_max."""
    if not 1 <= s <= 8:
        raise ValueError("s must be in 1..8")
    low = threshold_lower_limit(s)
    vanishing = []
    for d in range(low, d_max + 1):
        for t in t_range(d, s):
            if elimination_determinant(d, s, t) == 0:
                vanishing.append((d, t))
    threshold = max((v[0] for v in vanishing), default=low - 1) + 1
    return ThresholdResult(s, d_max, max(threshold, low), vanishing)
