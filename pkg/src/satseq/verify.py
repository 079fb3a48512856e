"""Reproduction suite for the published identities and values.

Each item is a label plus a zero-argument check returning (ok, detail).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Tuple

from . import bounds, gordan, laurent, probes, reps, saturation, splitting
from .poly import Universe, parse
from .transvectants import cubic_covariant, evaluate, generic_form, transvect

PUBLISHED_TABLE = {
    4: (3,), 5: (3,), 6: (5, 3), 7: (4, 3), 8: (5, 3, 3), 9: (5, 3, 3),
    10: (5, 3, 3, 3), 11: (5, 3, 3, 3), 12: (7, 5, 3, 3, 3),
    13: (5, 4, 3, 3, 3), 14: (7, 5, 3, 3, 3, 3), 15: (6, 5, 3, 3, 3, 3),
    16: (7, 5, 4, 3, 3, 3, 3), 17: (7, 5, 4, 3, 3, 3, 3), 18: (7, 5, 5, 3, 3, 3, 3, 3),
    19: (7, 5, 4, 3, 3, 3, 3, 3), 20: (8, 5, 5, 4, 3, 3, 3, 3, 3),
}
PUBLISHED_THRESHOLDS = {1: 4, 2: 8, 3: 10, 4: 14, 5: 18, 6: 22, 7: 26, 8: 30}

Check = Callable[[], Tuple[bool, str]]


@dataclass
class Item:
    label: str
    check: Check
    slow: bool = False


@dataclass
class ItemResult:
    label: str
    ok: bool
    detail: str

    def as_dict(self) -> dict:
        return {"label": self.label, "ok": self.ok, "detail": self.detail}


def _coeffs(combo, expected) -> Tuple[bool, str]:
    got = {a: combo.coefficient(a) for a in expected}
    ok = all(got[a] == Fraction(v) for a, v in expected.items())
    return ok, ", ".join(f"{{{a},{combo.weight - a}}}: {got[a]}" for a in expected)


def _table_rows(d_max: int) -> Check:
    def run():
        engine = saturation.SaturationEngine()
        bad = []
        for d in range(4, d_max + 1):
            rec = engine.saturation_sequence(d)
            if tuple(rec.alphas) != PUBLISHED_TABLE[d]:
                bad.append(f"d={d}: {rec.alphas}")
        return not bad, "; ".join(bad) or f"rows 4..{d_max} match"
    return run


def _bounds_rows(d_max: int) -> Check:
    def run():
        bad = []
        for d in range(4, d_max + 1):
            s = max(PUBLISHED_TABLE[d])
            z = bounds.Zeta(d)
            if not (z.at_most(s) and s <= d + 2):
                bad.append(str(d))
        return not bad, "violations at d=" + ",".join(bad) if bad else f"holds for d=4..{d_max}"
    return run


def _counting() -> Tuple[bool, str]:
    bad = []
    for d in range(4, 61):
        z = bounds.Zeta(d)
        m = 2
        while z.exceeds(m):
            if bounds.check_counting_inequality(d, m):
                bad.append((d, m))
            m += 1
    return not bad, f"counterexamples {bad}" if bad else "false below the bound for d=4..60"


def _factorization() -> Tuple[bool, str]:
    ok = all(bounds.quadratic_coefficients(d) == bounds.factored_coefficients(d) for d in range(3, 61))
    return ok, "coefficients agree for d=3..60"


def _splitting_d4() -> Tuple[bool, str]:
    L = Universe.of(*(f"l{i}" for i in range(1, 5)))
    data = splitting.affine_hessian(4)
    checks = [
        data.u[2].scale(Fraction(1, 2)) == parse("1*l2 + -1*l1^2", L),
        data.u[3] == parse("1*l3 + -1*l1*l2", L),
        data.u[4].scale(3) == parse("1*l4 + 2*l1*l3 + -3*l2^2", L),
    ]
    published_g = {
        5: {4: "3*l1", 3: "-3*l2", 2: "1*l3"},
        6: {4: "6*l2", 3: "-2*l3 + -6*l1*l2", 2: "3*l2^2"},
    }
    for s, gs in published_g.items():
        total = L.zero()
        for r, g in gs.items():
            total = total + parse(g, L) * data.u[r]
        checks.append(total == data.v[s])
    lower = splitting.xi_generators(4)
    expected_xi = {5: [(-1, 3), (3, 2), (-3, 1), (1, 0), (0, 0)], 6: [(-3, 4), (8, 3), (-6, 2), (0, 0), (1, 0)]}
    for g in lower:
        want = [laurent.LaurentPoly.monomial(c, e) for c, e in expected_xi[g.s]]
        checks.append(list(g.coords) == want)
    Q = splitting.transition_matrix(4)
    M = laurent.LaurentPoly.monomial
    checks.append(laurent.mat_equal(Q, [[M(-1), M(3, -1)], [M(-3, 1), M(8)]]))
    E = [[M(3, 1), M(-1)], [M(-1), M(0)]]
    F = [[M(0), M(1)], [M(1), M(-3, -1)]]
    checks.append(laurent.mat_equal(laurent.matmul(laurent.inverse(E), F), Q))
    ts = splitting.splitting_type(4).twists
    checks.append(ts == [-11, -11])
    return all(checks), f"{sum(checks)}/{len(checks)} sub-checks, twists {ts}"


def items(full: bool = False) -> List[Item]:
    out = [
        Item("odd self-transvectants vanish (d=5, r=1,3,5)",
             lambda: (all(transvect(generic_form(5), generic_form(5), r).is_zero() for r in (1, 3, 5)), "")),
        Item("d=6: 7 (F,H2)_3 = (F,H4)_1", _equal_d6),
        Item("d=4: H4 F = 6 (H2,F)_2", _equal_d4),
        Item("d=7: (H4,H6)_2 three-term relation", _equal_d7),
        Item("d=5: {2,5} vanishes", lambda: (cubic_covariant(5, 2, 5).is_zero(), "")),
        Item("decomposition of Sym^3 S_6", lambda: (str(reps.decompose_sym(6, 3)) == "S_18 ⊕ S_14 ⊕ S_12 ⊕ S_10 ⊕ S_8 ⊕ S_6^2 ⊕ S_2",
                                                  str(reps.decompose_sym(6, 3)))),
        Item("degree-4 invariant count h(75) = 13", lambda: (reps.quartic_invariant_count(75) == 13, "")),
        Item("catalecticant ideal in degree 2 at d=4", lambda: (saturation.ideal_dim(4, 2, 2) == 6 == saturation.ic_dim(4, 2), "")),
        Item("saturation table rows" + (" d=4..12" if full else " d=4..9"), _table_rows(12 if full else 9), slow=full),
        Item("zeta(d) <= S(d) <= d+2 on the published table", _bounds_rows(20)),
        Item("zeta(4)^2 = 21/4", lambda: (bounds.Zeta(4).square == Fraction(21, 4), "")),
        Item("counting inequality fails below zeta(d)", _counting),
        Item("quadratic factorization of the counting polynomial", _factorization),
        Item("alpha_2 probe: (2,1) entry closed form, d=12..16",
             lambda: (all(probes.alpha2_matrix(d)[1][0] == probes.alpha2_entry21_formula(d) for d in range(12, 17)), "")),
        Item("alpha_1 degree-4 probe: f(9) = -686", lambda: (probes.quartic_probe_polynomial(9) == -686, "")),
        Item("triple bounds at d = N..N+2", _triples),
        Item("Gordan lower syzygy (k=1, w=6) at d=7", lambda: _coeffs(gordan.gordan_lower(7, 1, 6),
                                                                      {2: Fraction(5, 2), 4: Fraction(5, 3), 6: Fraction(-11, 28)})),
        Item("Gordan lower syzygy (k=1, w=6) at d=7 expands to zero",
             lambda: (gordan.expand_to_zero(7, gordan.gordan_lower(7, 1, 6)), "")),
        Item("Gordan upper syzygy (k=4, w=13) at d=11", lambda: _coeffs(gordan.gordan_upper(11, 4, 13),
                                                                        {4: 1, 6: Fraction(35, 13), 8: Fraction(-31, 66)})),
        Item("Gordan upper syzygy (k=4, w=13) at d=11 expands to zero",
             lambda: (gordan.expand_to_zero(11, gordan.gordan_upper(11, 4, 13)), "")),
        Item("d=9 elimination block for {6,2}, {8,0}", _block_d9),
        Item("leading coefficient 1/d - 1/2 for d <= 40",
             lambda: (all(gordan.lower_syzygy_coefficient(d, 1, d, d) == Fraction(1, d) - Fraction(1, 2)
                          for d in range(3, 41)), "")),
        Item("position of (6,9) at d=13 is 3", lambda: (gordan.position(13, 6, 9) == 3, "")),
        Item("Delta_6 closed form at d=8,10,12,20", _delta6),
        Item("thresholds N_1..N_5 with d_max=40", _thresholds),
        Item("d=4 splitting: u, v, cofactors, xi, Q, E D F, twists (-11,-11)", _splitting_d4),
    ]
    return out


def _equal_d6() -> Tuple[bool, str]:
    diff = evaluate("(F,H2)_3", 6).scale(7) - evaluate("(F,H4)_1", 6)
    return diff.is_zero(), f"{len(diff.body)} terms in the difference"


def _equal_d4() -> Tuple[bool, str]:
    diff = evaluate("H4*F", 4) - evaluate("(H2,F)_2", 4).scale(6)
    return diff.is_zero(), f"{len(diff.body)} terms in the difference"


def _equal_d7() -> Tuple[bool, str]:
    rhs = (evaluate("(H2,F^2)_10", 7).scale(Fraction(42, 13))
           + evaluate("(H2,H2)_8", 7).scale(Fraction(15876, 845))
           + evaluate("(H2,H4)_6", 7).scale(Fraction(10332, 715)))
    diff = evaluate("(H4,H6)_2", 7) - rhs
    return diff.is_zero(), f"{len(diff.body)} terms in the difference"


def _triples() -> Tuple[bool, str]:
    bad = [(q, b, N, d) for q, b, N in probes.alpha_probe_quadruples() for d in range(N, N + 3)
           if not probes.run_triple_bound(q, b, N, d)]
    return not bad, f"failures {bad}" if bad else "all nonzero"


def _block_d9() -> Tuple[bool, str]:
    g1, g2 = gordan.gordan_lower(9, 1, 8), gordan.gordan_lower(9, 2, 8)
    block = [[g1.coefficient(6), g1.coefficient(8)], [g2.coefficient(6), g2.coefficient(8)]]
    want = [[Fraction(49, 33), Fraction(-13, 30)], [Fraction(13, 22), Fraction(-13, 60)]]
    return block == want, str(block)


def _delta6() -> Tuple[bool, str]:
    bad = [d for d in (8, 10, 12, 20)
           if gordan.elimination_determinant(d, 3, 6, require_bound=False) != gordan.delta6_closed_form(d)]
    return not bad, f"mismatch at {bad}" if bad else ""


def _thresholds() -> Tuple[bool, str]:
    got = {s: gordan.threshold_search(s, 40).threshold for s in range(1, 6)}
    return all(got[s] == PUBLISHED_THRESHOLDS[s] for s in got), str(got)


def run(full: bool = False) -> List[ItemResult]:
    results = []
    for item in items(full):
        try:
            ok, detail = item.check()
        except Exception as exc:  # a crash is a failed item, not an aborted run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(ItemResult(item.label, bool(ok), detail))
    return results
