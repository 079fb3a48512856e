"""Acceptance suite: one PASS/FAIL line per criterion, printed to the terminal."""

import random
import time
from fractions import Fraction
from math import comb

import pytest

from satseq import gordan, reps, splitting, verify
from satseq.bounds import Zeta, check_counting_inequality
from satseq.saturation import RankConfig, SaturationEngine
from satseq.transvectants import (
    binary_form,
    cubic_covariant,
    evaluate,
    generic_form,
    hessian_covariant,
    transvect,
)

TABLE_4_12 = {
    4: [3], 5: [3], 6: [5, 3], 7: [4, 3], 8: [5, 3, 3], 9: [5, 3, 3],
    10: [5, 3, 3, 3], 11: [5, 3, 3, 3], 12: [7, 5, 3, 3, 3],
}


@pytest.fixture(scope="module")
def table():
    engine = SaturationEngine(RankConfig(method="modular", seed=0))
    start = time.monotonic()
    rows = {d: engine.saturation_sequence(d) for d in TABLE_4_12}
    return rows, time.monotonic() - start


def report(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
    assert ok, detail


def test_criterion_1_table(capsys, table):
    rows, seconds = table
    got = {d: rec.alphas for d, rec in rows.items()}
    bad = {d: got[d] for d in TABLE_4_12 if got[d] != TABLE_4_12[d]}
    guards_failed = [(d, g) for d, rec in rows.items() for g in rec.guards if g["status"] == "failed"]
    ok = not bad and not guards_failed and seconds < 30 * 60
    report(capsys, 1, ok, f"table d=4..12 exact ({seconds:.1f}s)" if ok
           else f"mismatches {bad}, failed guards {guards_failed}")


def test_criterion_2_bounds(capsys, table):
    rows, _ = table
    bad = [d for d, rec in rows.items()
           if not (rec.big_s is not None and Zeta(d).at_most(rec.big_s) and rec.big_s <= d + 2)]
    counting = []
    for d in range(4, 61):
        m = 2
        while Zeta(d).exceeds(m):
            if check_counting_inequality(d, m):
                counting.append((d, m))
            m += 1
    ok = not bad and not counting
    report(capsys, 2, ok, "zeta(d) <= S(d) <= d+2 for d=4..12; counting inequality false below zeta for d<=60"
           if ok else f"bound violations {bad}, counting {counting}")


def test_criterion_3_transvectants(capsys):
    failures = []
    for d in range(2, 7):
        F = generic_form(d)
        if any(not transvect(F, F, r).is_zero() for r in range(1, d + 1, 2)):
            failures.append(f"odd self-transvectant d={d}")
    rng = random.Random(0)
    for _ in range(10):
        d = rng.randint(2, 6)
        A = binary_form(d, [rng.randint(-3, 3) for _ in range(d + 1)])
        B = binary_form(d, [rng.randint(-3, 3) for _ in range(d + 1)])
        for r in range(d + 1):
            if transvect(A, B, r) != transvect(B, A, r).scale((-1) ** r):
                failures.append(f"antisymmetry d={d} r={r}")
    for d in range(4, 8):
        for q in range(1, d // 2 + 1):
            for r in range(0, min(d, 2 * d - 4 * q) + 1):
                C = transvect(generic_form(d), hessian_covariant(d, q), r)
                if (C.degree, C.order) != (3, d + 2 * d - 4 * q - 2 * r):
                    failures.append(f"order arithmetic d={d} q={q} r={r}")
    if not (evaluate("(F,H2)_3", 6).scale(7) - evaluate("(F,H4)_1", 6)).is_zero():
        failures.append("d=6 identity")
    if not (evaluate("H4*F", 4) - evaluate("(H2,F)_2", 4).scale(6)).is_zero():
        failures.append("d=4 identity")
    rhs = (evaluate("(H2,F^2)_10", 7).scale(Fraction(42, 13))
           + evaluate("(H2,H2)_8", 7).scale(Fraction(15876, 845))
           + evaluate("(H2,H4)_6", 7).scale(Fraction(10332, 715)))
    if evaluate("(H4,H6)_2", 7) != rhs:
        failures.append("d=7 three-term relation")
    if not cubic_covariant(5, 2, 5).is_zero():
        failures.append("d=5 {2,5}")
    report(capsys, 3, not failures, "transvectant identities exact" if not failures else "; ".join(failures))


def test_criterion_4_gordan(capsys):
    failures = []
    for d in range(3, 11):
        for k, w in gordan.lower_parameters(d):
            if not gordan.expand_to_zero(d, gordan.gordan_lower(d, k, w)):
                failures.append(f"lower d={d} k={k} w={w}")
        for k, w in gordan.upper_parameters(d):
            if not gordan.expand_to_zero(d, gordan.gordan_upper(d, k, w)):
                failures.append(f"upper d={d} k={k} w={w}")
    lo = gordan.gordan_lower(7, 1, 6)
    if [lo.coefficient(a) for a in (2, 4, 6)] != [Fraction(5, 2), Fraction(5, 3), Fraction(-11, 28)]:
        failures.append("d=7 coefficients")
    up = gordan.gordan_upper(11, 4, 13)
    if [up.coefficient(a) for a in (4, 6, 8)] != [1, Fraction(35, 13), Fraction(-31, 66)]:
        failures.append("d=11 coefficients")
    if any(gordan.lower_syzygy_coefficient(d, 1, d, d) != Fraction(1, d) - Fraction(1, 2) for d in range(3, 41)):
        failures.append("leading coefficient")
    for d in (8, 10, 12, 20):
        if gordan.elimination_determinant(d, 3, 6, require_bound=False) != gordan.delta6_closed_form(d):
            failures.append(f"Delta_6 at d={d}")
    thresholds = {s: gordan.threshold_search(s, 40).threshold for s in range(1, 6)}
    if thresholds != {1: 4, 2: 8, 3: 10, 4: 14, 5: 18}:
        failures.append(f"thresholds {thresholds}")
    report(capsys, 4, not failures, f"Gordan syzygies, Delta_6, thresholds {thresholds}"
           if not failures else "; ".join(failures))


def _brute_multiplicity(d, m, n):
    from itertools import combinations_with_replacement
    w = {}
    for mono in combinations_with_replacement(range(d + 1), m):
        w[sum(mono)] = w.get(sum(mono), 0) + 1
    k = (m * d - n) // 2
    return w.get(k, 0) - w.get(k - 1, 0)


def test_criterion_5_representations(capsys):
    failures = []
    if str(reps.decompose_sym(6, 3)) != "S_18 ⊕ S_14 ⊕ S_12 ⊕ S_10 ⊕ S_8 ⊕ S_6^2 ⊕ S_2":
        failures.append("Sym^3 S_6")
    for d in range(0, 9):
        for m in range(0, 5):
            for n in range(m * d, -1, -2):
                if reps.multiplicity(d, m, n) != _brute_multiplicity(d, m, n):
                    failures.append(f"eta({d},{m},{n})")
    if reps.quartic_invariant_count(75) != 13:
        failures.append("h(75)")
    for d in range(1, 201):
        brute = sum(1 for a in range(d + 1) for b in range(d + 1) if 2 * a + 3 * b == d)
        if reps.quartic_invariant_count(d) != brute:
            failures.append(f"h({d})")
    report(capsys, 5, not failures, "decomposition, multiplicities, h(d)" if not failures else "; ".join(failures))


def test_criterion_6_splitting(capsys):
    failures = []
    ok, detail = verify._splitting_d4()
    if not ok:
        failures.append(f"d=4 example: {detail}")
    observed = {}
    for d in range(3, 9):
        res = splitting.splitting_type(d)
        observed[d] = res.twists
        if len(res.twists) != d - 2 or not splitting.bounds_hold(d, res.twists):
            failures.append(f"bounds d={d}: {res.twists}")
        if splitting.splitting_type(d, "highest").twists != res.twists:
            failures.append(f"rule dependence d={d}")
    report(capsys, 6, not failures, f"splitting types {observed}" if not failures else "; ".join(failures))


def test_criterion_7_rank_backends(capsys):
    modular = SaturationEngine(RankConfig(method="modular", seed=0))
    exact = SaturationEngine(RankConfig(method="rational"))
    failures = []
    blocks = 0
    for d in range(4, 9):
        for q in range(1, d // 2 + 1):
            m = 2
            while m <= d + 2 and comb(m + d, d) <= 2000:
                for k in range(m * d // 2 + 1):
                    blocks += 1
                    if modular.block_rank(d, q, m, k).dim != exact.block_rank(d, q, m, k).dim:
                        failures.append(f"block d={d} q={q} m={m} k={k}")
                m += 1
    for d in range(4, 9):
        for m in range(2, d + 3):
            if modular.ideal_dim(d, d // 2, m).dim != comb(m + d, d) - (m * d + 1):
                failures.append(f"Hilbert d={d} m={m}")
    report(capsys, 7, not failures, f"{blocks} weight blocks agree; Hilbert function of J_2e matches for d<=8"
           if not failures else "; ".join(failures))


def test_criterion_8_tail_of_threes(capsys, table):
    rows, _ = table
    failures = []
    checked = []
    for s in (1, 2, 3):
        N = gordan.threshold_search(s, 40).threshold
        for d in range(N, 13):
            tail = rows[d].alphas[-s:]
            checked.append((s, d))
            if len(tail) < s or any(a != 3 for a in tail):
                failures.append(f"s={s} d={d}: {rows[d].alphas}")
    report(capsys, 8, not failures, f"last s entries are 3 on {len(checked)} (s, d) pairs"
           if not failures else "; ".join(failures))
