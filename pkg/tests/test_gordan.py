from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from satseq import gordan
from satseq.gordan import GordanParameters
from satseq.transvectants import binary_form


def _all_parameters(d_max):
    for d in range(3, d_max + 1):
        for k, w in gordan.lower_parameters(d):
            yield d, "lower", k, w
        for k, w in gordan.upper_parameters(d):
            yield d, "upper", k, w


@pytest.mark.parametrize("d,family,k,w", list(_all_parameters(10)))
def test_every_syzygy_expands_to_zero(d, family, k, w):
    combo = (gordan.gordan_lower if family == "lower" else gordan.gordan_upper)(d, k, w)
    assert gordan.expand_to_zero(d, combo)


@pytest.mark.parametrize("d", range(4, 11))
def test_families_agree_at_weight_d(d):
    for k in range(0, (d + 1) // 2):
        lo, up = gordan.gordan_lower(d, k, d), gordan.gordan_upper(d, k, d)
        assert all(lo.coefficient(a) == up.coefficient(a) for a in range(d + 1))


@pytest.mark.parametrize("d,k,w", [(7, 1, 6), (8, 2, 7), (9, 1, 8)])
def test_perturbed_coefficient_does_not_vanish(d, k, w):
    combo = gordan.gordan_lower(d, k, w)
    a = next(a for (a, _), c in combo.even_terms() if c and gordan.cubic_covariant(d, a, w - a).body)
    bumped = combo.with_coefficient(a, combo.coefficient(a) + 1)
    assert not gordan.expand_to_zero(d, bumped)


def test_published_coefficients():
    lo = gordan.gordan_lower(7, 1, 6)
    assert [lo.coefficient(a) for a in (2, 4, 6)] == [Fraction(5, 2), Fraction(5, 3), Fraction(-11, 28)]
    up = gordan.gordan_upper(11, 4, 13)
    assert [up.coefficient(a) for a in (4, 6, 8)] == [1, Fraction(35, 13), Fraction(-31, 66)]


def test_d9_elimination():
    g1, g2 = gordan.gordan_lower(9, 1, 8), gordan.gordan_lower(9, 2, 8)
    assert [[g1.coefficient(6), g1.coefficient(8)], [g2.coefficient(6), g2.coefficient(8)]] == \
        [[Fraction(49, 33), Fraction(-13, 30)], [Fraction(13, 22), Fraction(-13, 60)]]
    combo = gordan.eliminate(g1, g2, 6)
    assert combo.coefficient(6) == 0
    assert gordan.expand_to_zero(9, combo)


def test_leading_coefficient():
    for d in range(3, 41):
        assert gordan.lower_syzygy_coefficient(d, 1, d, d) == Fraction(1, d) - Fraction(1, 2)


def test_position_and_ranges():
    assert gordan.position(13, 6, 9) == 3
    assert list(gordan.t_range(8, 2)) == list(range(5))
    assert list(gordan.t_range(9, 2)) == list(range(7))
    with pytest.raises(ValueError):
        gordan.position(13, 5, 9)


@pytest.mark.parametrize("d", [8, 10, 12, 20])
def test_delta6_closed_form(d):
    assert gordan.elimination_determinant(d, 3, 6, require_bound=False) == gordan.delta6_closed_form(d)


@pytest.mark.parametrize("d", [10, 14, 16, 22, 30])
def test_delta6_closed_form_in_range(d):
    assert gordan.elimination_determinant(d, 3, 6) == gordan.delta6_closed_form(d)


def test_matrices_are_square():
    for d in range(6, 21):
        for s in (1, 2):
            if d < 4 * s - 2:
                continue
            for t in gordan.t_range(d, s):
                M = gordan.build_matrix(d, s, t)
                assert all(len(row) == len(M) for row in M)


def test_below_bound_rejected():
    with pytest.raises(ValueError):
        gordan.build_matrix(8, 3, 6)
    with pytest.raises(ValueError):
        gordan.elimination_determinant(8, 2, 2, parity="odd")


def test_first_thresholds():
    got = {s: gordan.threshold_search(s, 40).threshold for s in range(1, 6)}
    assert got == {1: 4, 2: 8, 3: 10, 4: 14, 5: 18}


def test_s1_never_vanishes():
    res = gordan.threshold_search(1, 40)
    assert res.vanishing == [] and res.threshold == 4


# -- the general series on concrete forms ----------------------------------------

small = st.integers(-3, 3)


@st.composite
def series_case(draw):
    m, n, p = (draw(st.integers(1, 4)) for _ in range(3))
    a2 = draw(st.integers(0, min(m, p)))
    a3 = draw(st.integers(0, min(m - a2, n)))
    if a2 + a3 == m:
        a1 = draw(st.integers(0, min(n - a3, p - a2)))
    else:
        a1 = 0
    params = GordanParameters(m, n, p, a1, a2, a3)
    d = max(m, n, p)
    forms = []
    for order in (m, n, p):
        coeffs = draw(st.lists(small, min_size=order + 1, max_size=order + 1))
        forms.append(_embed(d, order, coeffs))
    return params, forms


def _embed(d, order, coeffs):
    """An a-free form of the given order inside the d-universe."""
    f = binary_form(d, [0] * (d + 1))
    U = f.universe
    body = U.zero()
    for i, c in enumerate(coeffs):
        if c:
            body = body + U.monomial(c, x1=order - i, x2=i)
    return type(f)(d, body, 0, order)


@given(series_case())
def test_general_series_on_random_forms(case):
    params, (f, phi, psi) = case
    assert gordan.verify_syzygy(f, phi, psi, params)


def test_invalid_series_parameters():
    with pytest.raises(ValueError):
        GordanParameters(2, 2, 2, 1, 1, 0)  # a1 > 0 needs a2 + a3 = m
    with pytest.raises(ValueError):
        GordanParameters(2, 2, 2, 0, 2, 1)


def test_series_is_not_vacuous():
    params = GordanParameters(3, 3, 3, 0, 1, 2)
    f, phi, psi = (_embed(3, 3, c) for c in ([1, 2, 0, -1], [0, 1, 3, 1], [2, -1, 1, 1]))
    assert gordan.verify_syzygy(f, phi, psi, params)
    lhs, rhs = gordan.gordan_general(params)
    forms = {"f": f, "phi": phi, "psi": psi}
    left = gordan._evaluate_side(lhs, forms)
    assert not left.is_zero()
    assert not (left + gordan._evaluate_side(rhs, forms)).is_zero()
