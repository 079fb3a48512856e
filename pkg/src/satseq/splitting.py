"""Splitting type of the rank d-2 bundle of Hessian syzygies on the curve.

Lower chart: l_i = a_i / a_0 and f = F / a_0.  Upper chart: m_i = a_{d-i} / a_d
and f' = F / a_d, which is the lower chart with x1 and x2 exchanged.  Both
charts use the variable names l1..ld; only the reduction to the curve
(l_i -> L^i, resp. L^-i) and the placement of basis vectors differ.

Module basis W_j (2 <= j <= 2d-2) is (-1)^j x1^(j-2) x2^(2d-j-2); it is U_j
for j <= d and V_j beyond.  The upper chart's W'_j is the same polynomial as
W_{2d-j}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

from .laurent import (
    Birkhoff,
    LaurentPoly,
    Matrix,
    birkhoff_factorize,
    inverse,
    invert_variable,
    scale,
)
from .poly import Poly, Universe, substitute
from .transvectants import transvectant

RULES = ("lowest", "highest")


class SplittingError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def affine_universe(d: int) -> Universe:
    return Universe(tuple(f"l{i}" for i in range(1, d + 1)) + ("x1", "x2"))


@lru_cache(maxsize=None)
def cofactor_universe(d: int) -> Universe:
    return Universe(("l1",) + tuple(f"U{r}" for r in range(2, d + 1)))


def weight(exponent, first: int = 1) -> int:
    return sum((i + first) * e for i, e in enumerate(exponent))


@dataclass(frozen=True)
class AffineHessianData:
    d: int
    u: Dict[int, Poly]  # r in 2..d
    v: Dict[int, Poly]  # s in d+1..2d-2

    def w(self, j: int) -> Poly:
        return self.u[j] if j <= self.d else self.v[j]


def affine_form(d: int) -> Poly:
    U = affine_universe(d)
    f = U.monomial(1, x1=d)
    for i in range(1, d + 1):
        f = f + U.monomial(comb(d, i), **{f"l{i}": 1, "x1": d - i, "x2": i})
    return f


@lru_cache(maxsize=None)
def affine_hessian(d: int) -> AffineHessianData:
    """Coefficients of (f, f)_2 with the binomials binom(2d-4, j-2) divided out."""
    if d < 3:
        raise ValueError("d must be >= 3")
    U = affine_universe(d)
    f = affine_form(d)
    h = transvectant(f, f, 2, d, d)
    ix2 = U.index("x2")
    L = Universe(U.names[:d])
    coeffs: Dict[int, Dict] = {j: {} for j in range(2, 2 * d - 1)}
    for e, c in h.terms.items():
        j = e[ix2] + 2
        coeffs[j][e[:d]] = c / comb(2 * d - 4, j - 2)
    polys = {j: Poly(L, t) for j, t in coeffs.items()}
    for j, p in polys.items():
        if any(weight(e) != j for e in p.terms):
            raise SplittingError(f"coefficient {j} is not isobaric")
    return AffineHessianData(d, {r: polys[r] for r in range(2, d + 1)},
                             {s: polys[s] for s in range(d + 1, 2 * d - 1)})


def module_basis(d: int, j: int) -> Poly:
    U = affine_universe(d)
    return U.monomial((-1) ** j, x1=j - 2, x2=2 * d - j - 2)


def pairing(d: int, j: int) -> Poly:
    """((f, f)_2, W_j)_{2d-4}, which should be w_j."""
    f = affine_form(d)
    h = transvectant(f, f, 2, d, d)
    out = transvectant(h, module_basis(d, j), 2 * d - 4, 2 * d - 4, 2 * d - 4)
    L = Universe(affine_universe(d).names[:d])
    return Poly(L, {e[:d]: c for e, c in out.terms.items()})


def leading_constants(data: AffineHessianData) -> Dict[int, Fraction]:
    """c_r with u_r = c_r l_r + (terms in l_1..l_{r-1})."""
    d = data.d
    out = {}
    for r in range(2, d + 1):
        e = tuple(1 if i == r - 1 else 0 for i in range(d))
        c = data.u[r].coefficient(e)
        if c == 0:
            raise SplittingError(f"u_{r} has no linear l_{r} term")
        out[r] = c
    return out


@lru_cache(maxsize=None)
def _triangular_substitution(d: int) -> Dict[str, Poly]:
    """l_r as polynomials in l1, U2..Ud by inverting u_r = c_r l_r + rest_r."""
    data = affine_hessian(d)
    C = cofactor_universe(d)
    consts = leading_constants(data)
    subs: Dict[str, Poly] = {"l1": C.var("l1")}
    for r in range(2, d + 1):
        lr = tuple(1 if i == r - 1 else 0 for i in range(d))
        rest = Poly(data.u[r].universe, {e: c for e, c in data.u[r].terms.items() if e != lr})
        rest_sub = substitute(rest, {**subs, **{f"l{i}": C.zero() for i in range(r, d + 1)}}, C)
        subs[f"l{r}"] = (C.var(f"U{r}") - rest_sub).scale(1 / consts[r])
    return subs


@lru_cache(maxsize=None)
def cofactor_decomposition(d: int, rule: str = "lowest") -> Dict[int, Dict[int, Poly]]:
    """{s: {r: g}} with v_s = sum_r g u_r, every g isobaric of weight s - r.

    v_s is rewritten in l1, U2..Ud; each monomial is then charged to the
    lowest (or highest) U it contains, and U_r is substituted back by u_r.
    """
    if rule not in RULES:
        raise ValueError(f"rule must be one of {RULES}")
    data = affine_hessian(d)
    C = cofactor_universe(d)
    L = data.u[2].universe
    subs = _triangular_substitution(d)
    back = {"l1": L.var("l1"), **{f"U{r}": data.u[r] for r in range(2, d + 1)}}
    out: Dict[int, Dict[int, Poly]] = {}
    for s, vs in data.v.items():
        rewritten = substitute(vs, subs, C)
        buckets: Dict[int, Dict] = {r: {} for r in range(2, d + 1)}
        for e, c in rewritten.terms.items():
            present = [r for r in range(2, d + 1) if e[r - 1]]
            if not present:
                raise SplittingError(f"v_{s} has a component off the ideal")
            r = min(present) if rule == "lowest" else max(present)
            e2 = list(e)
            e2[r - 1] -= 1
            buckets[r][tuple(e2)] = c
        gs = {r: substitute(Poly(C, b), back, L) for r, b in buckets.items()}
        total = L.zero()
        for r, g in gs.items():
            if any(weight(e) != s - r for e in g.terms):
                raise SplittingError(f"cofactor g_{s - r} for u_{r} is not isobaric")
            total = total + g * data.u[r]
        if total != vs:
            raise SplittingError(f"cofactor identity fails for v_{s}")
        out[s] = gs
    return out


# -- generators on the curve -------------------------------------------------------


@dataclass(frozen=True)
class XiGenerator:
    s: int  # d+1..2d-2 (the upper chart's generator of weight -s)
    chart: str
    coords: Tuple[LaurentPoly, ...]  # on W_2 .. W_{2d-2} of the lower chart

    def coordinate(self, j: int) -> LaurentPoly:
        return self.coords[j - 2]


def kernel_residual(d: int, rule: str = "lowest") -> Dict[int, Poly]:
    """f(z_s) = v_s - sum g u_r computed from the module map itself; all zero."""
    out = {}
    for s, gs in cofactor_decomposition(d, rule).items():
        value = pairing(d, s)
        for r, g in gs.items():
            value = value - g * pairing(d, r)
        out[s] = value
    return out


def _to_curve(p: Poly, sign: int) -> LaurentPoly:
    out: Dict[int, Fraction] = {}
    for e, c in p.terms.items():
        k = sign * weight(e)
        out[k] = out.get(k, 0) + c
    return LaurentPoly(out)


def xi_generators(d: int, chart: str = "lower", rule: str = "lowest") -> List[XiGenerator]:
    """z_s = V_s - sum_r g U_r reduced to the curve, ordered by s ascending."""
    if chart not in ("lower", "upper"):
        raise ValueError("chart must be 'lower' or 'upper'")
    residual = kernel_residual(d, rule)
    if any(not p.is_zero() for p in residual.values()):
        raise SplittingError("a generator is not in the kernel")
    sign = 1 if chart == "lower" else -1
    out = []
    for s, gs in cofactor_decomposition(d, rule).items():
        local = {j: LaurentPoly() for j in range(2, 2 * d - 1)}
        local[s] = LaurentPoly.monomial(1)
        for r, g in gs.items():
            local[r] = -_to_curve(g, sign)
        if chart == "lower":
            coords = tuple(local[j] for j in range(2, 2 * d - 1))
        else:
            coords = tuple(local[2 * d - j] for j in range(2, 2 * d - 1))
        out.append(XiGenerator(s, chart, coords))
    return out


def coordinate_matrix(d: int, rule: str = "lowest") -> Matrix:
    """P with xi^- = P xi^+ on the overlap (no change of frame).

    xi^- lists the upper generators by weight -(2d-2) .. -(d+1); xi^+ lists
    the lower ones by weight d+1 .. 2d-2.
    """
    lower = xi_generators(d, "lower", rule)
    upper = sorted(xi_generators(d, "upper", rule), key=lambda g: -g.s)
    P = [[g.coordinate(x.s) for x in lower] for g in upper]
    for i, g in enumerate(upper):
        for j in range(2, 2 * d - 1):
            combo = LaurentPoly()
            for k, x in enumerate(lower):
                combo = combo + P[i][k] * x.coordinate(j)
            if combo != g.coordinate(j):
                raise SplittingError(f"upper generator {g.s} is not a combination at W_{j}")
    return P


def transition_matrix(d: int, rule: str = "lowest") -> Matrix:
    """Q with Q xi^- = L^-(3d-1) xi^+.

    Sections of the lower chart carry the frame a_0^-2, those of the upper
    chart a_d^-2 = L^-2d a_0^-2, so Q = L^-(d-1) P^-1.
    """
    P = coordinate_matrix(d, rule)
    Q = scale(inverse(P), LaurentPoly.monomial(1, -(d - 1)))
    for i, row in enumerate(Q):
        for j, x in enumerate(row):
            if not x.is_zero() and (x.as_monomial() is None or x.as_monomial()[1] != i - j):
                raise SplittingError(f"entry ({i},{j}) of Q is not c*L^{i - j}")
    return Q


def twists(d: int, exponents) -> List[int]:
    """F xi^- = diag(L^-(3d-1)-k_i) E xi^+, so each summand is O(-(3d-1) - k_i)."""
    return sorted(-(3 * d - 1) - k for k in exponents)


@dataclass
class SplittingResult:
    d: int
    Q: Matrix
    factorization: Birkhoff
    twists: List[int]

    @property
    def multiset(self) -> Counter:
        return Counter(self.twists)


def splitting_type(d: int, rule: str = "lowest") -> SplittingResult:
    Q = transition_matrix(d, rule)
    b = birkhoff_factorize(Q)
    return SplittingResult(d, Q, b, twists(d, b.exponents))


def splitting_type_upper_chart(d: int, rule: str = "lowest") -> List[int]:
    """Same bundle, factorized in M = 1/L with the charts exchanged.

    In M the transition is Q^-1: its polynomial factor is the former F and
    its Q[1/M] factor the former E.
    """
    P = coordinate_matrix(d, rule)
    Q_upper = invert_variable(scale(P, LaurentPoly.monomial(1, d - 1)))
    b = birkhoff_factorize(Q_upper)
    return twists(d, b.exponents)


def bounds_hold(d: int, ts) -> bool:
    return len(ts) == d - 2 and all(-4 * d + 4 <= t <= -2 * d - 2 for t in ts)
