"""Specialization probes giving lower bounds on individual alpha_q.

Each probe exhibits a covariant (H_{2q+2}, F)_r that cannot be rewritten in
terms of lower Hessians, by evaluating everything on a concrete binary form.
Transvection commutes with specialization, so covariants are built directly
from the concrete form instead of the generic one.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .linalg import det_fraction, rank_fraction
from .reps import quartic_invariant_count
from .transvectants import Covariant, binary_form, hessian_covariant, transvect

TRIPLES: Tuple[Tuple[int, int, int], ...] = ((1, 3, 6), (1, 4, 8), (2, 3, 12), (3, 3, 16))


class BelowThreshold(ValueError):
    pass


def _form(d: int, terms: Dict[int, int]) -> Covariant:
    """Binary form from {x2-exponent: coefficient}."""
    coeffs = [0] * (d + 1)
    for j, c in terms.items():
        coeffs[j] += c
    return binary_form(d, coeffs)


def probe_form_a(d: int) -> Covariant:
    """x1^d + x1^(d-2) x2^2 + x1 x2^(d-1) + x2^d."""
    return _form(d, {0: 1, 2: 1, d - 1: 1, d: 1})


def probe_form_b(d: int) -> Covariant:
    """x1^d + x1^(d-3) x2^3 - x1 x2^(d-1) + 2 x2^d."""
    return _form(d, {0: 1, 3: 1, d - 1: -1, d: 2})


def probe_form_ramp(d: int) -> Covariant:
    """sum_j (j + 1) x1^(d-j) x2^j."""
    return binary_form(d, [j + 1 for j in range(d + 1)])


def hessian_of(f: Covariant, q: int) -> Covariant:
    return transvect(f, f, 2 * q)


def x_coefficient(C: Covariant, i: int, j: int) -> Fraction:
    """Coefficient of x1^i x2^j in an a-free covariant."""
    U = C.universe
    e = [0] * len(U)
    e[U.index("x1")], e[U.index("x2")] = i, j
    return C.body.coefficient(tuple(e))


def x_vector(C: Covariant) -> List[Fraction]:
    n = C.order
    return [x_coefficient(C, n - j, j) for j in range(n + 1)]


# -- individual probes ---------------------------------------------------------


def probe_alpha1_degree3(d: int) -> bool:
    """(H_4, F)_2 and (H_2, F)_4 are not proportional."""
    f = probe_form_a(d)
    vecs = [x_vector(transvect(hessian_of(f, 2), f, 2)),
            x_vector(transvect(hessian_of(f, 1), f, 4))]
    return rank_fraction(vecs) == 2


def alpha2_matrix(d: int) -> List[List[Fraction]]:
    """Rows (H_6,F)_6, (H_4,F)_8, (H_2,F)_10 at three chosen coefficients."""
    f = probe_form_a(d)
    gammas = [transvect(hessian_of(f, 3), f, 6),
              transvect(hessian_of(f, 2), f, 8),
              transvect(hessian_of(f, 1), f, 10)]
    cols = [(2 * d - 12, d - 12), (2 * d - 13, d - 11), (2 * d - 15, d - 9)]
    return [[x_coefficient(g, i, j) for i, j in cols] for g in gammas]


def alpha2_entry21_formula(d: int) -> Fraction:
    return Fraction((d - 8) * (d - 9) * (d - 10) * (d - 11),
                    8 * (2 * d - 9) * (2 * d - 11) * (2 * d - 13) * (2 * d - 15))


def probe_alpha2_degree3(d: int) -> bool:
    return det_fraction(alpha2_matrix(d)) != 0


def probe_alpha3_degree3(d: int) -> bool:
    if d in (16, 17):
        # every index on the right would have to be >= 18, so nonvanishing
        # suffices; (H_8, F)_16 happens to vanish on both sparse probe forms
        g = probe_form_ramp(d)
        return not transvect(hessian_of(g, 4), g, 16).is_zero()
    f = probe_form_b(d)
    lower = [x_vector(transvect(hessian_of(f, 4 - i), f, 10 + 2 * i)) for i in range(1, 4)]
    top = x_vector(transvect(hessian_of(f, 4), f, 10))
    return rank_fraction(lower + [top]) > rank_fraction(lower)


def quartic_probe_polynomial(d: int) -> int:
    """d^3 - 8d^2 + 19d - 14 + (-1)^d binom(2d-6, d-3)."""
    return d**3 - 8 * d**2 + 19 * d - 14 + (-1) ** d * comb(2 * d - 6, d - 3)


def quartic_probe_determinant(d: int) -> Fraction:
    """| J(F1) J(F2) ; K(F1) K(F2) | for J = (H_4,H_4)_{2d-8}, K = (H_2,H_2)_{2d-4}."""
    forms = [_form(d, {0: 1, d: 1}), _form(d, {0: 1, 2: 1, d - 1: 1})]
    row_j, row_k = [], []
    for f in forms:
        h2, h4 = hessian_of(f, 1), hessian_of(f, 2)
        row_j.append(x_coefficient(transvect(h4, h4, 2 * d - 8), 0, 0))
        row_k.append(x_coefficient(transvect(h2, h2, 2 * d - 4), 0, 0))
    return det_fraction([row_j, row_k])


def probe_alpha1_degree4(d: int) -> bool:
    return quartic_probe_polynomial(d) != 0


_PROBES = {
    (1, 3, 6): probe_alpha1_degree3,
    (1, 4, 8): probe_alpha1_degree4,
    (2, 3, 12): probe_alpha2_degree3,
    (3, 3, 16): probe_alpha3_degree3,
}


def alpha_probe_quadruples() -> Tuple[Tuple[int, int, int], ...]:
    """The (q, b, N) triples: alpha_q > b for every d >= N."""
    return TRIPLES


def run_triple_bound(q: int, b: int, N: int, d: int) -> bool:
    if (q, b, N) not in _PROBES:
        raise ValueError(f"no probe for {(q, b, N)}")
    if d < N:
        raise BelowThreshold(f"d={d} below threshold {N}")
    return _PROBES[(q, b, N)](d)


# -- degree-4 invariants --------------------------------------------------------


def quartic_invariant(d: int, q: int) -> Covariant:
    """(H_{2q}, H_{2q})_{2d-4q}, a degree-4 invariant of the generic form."""
    h = hessian_covariant(d, q)
    return transvect(h, h, 2 * d - 4 * q)


def quartic_invariants_rank(d: int, qs: Sequence[int]) -> int:
    for q in qs:
        if not 1 <= q <= d // 2:
            raise ValueError(f"q={q} outside 1..{d // 2}")
    polys = [quartic_invariant(d, q).body for q in qs]
    support = sorted({e for p in polys for e in p.terms})
    return rank_fraction([[p.coefficient(e) for e in support] for p in polys])


def quartic_rank_report(d: int) -> dict:
    qs = list(range(1, d // 2 + 1))
    return {"d": d, "rank": quartic_invariants_rank(d, qs), "h": quartic_invariant_count(d)}


def quartic_forced_alphas(d: int) -> List[int]:
    """q in 1..e_d-1 with G^(q+1) outside span(G^(1..q)); each forces alpha_q > 4.

    (H_{2q+2}, H_{2q+2})_r cannot be rewritten through lower Hessians in
    degree 4 when its invariant is new.
    """
    out = []
    prev = 1
    for q in range(1, d // 2):
        r = quartic_invariants_rank(d, list(range(1, q + 2)))
        if r > prev:
            out.append(q)
        prev = r
    return out
