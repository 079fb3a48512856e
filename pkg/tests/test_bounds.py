import math
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from satseq.bounds import (
    Zeta,
    check_counting_inequality,
    counting_inequality_sides,
    factored_coefficients,
    factored_inequality_lhs,
    quadratic_coefficients,
    quadratic_part,
)


def zeta_float(d):
    return math.sqrt((d - 1) * (d * d - 2) / 2) / (d - 2)


@given(st.integers(3, 500))
def test_zeta_square_against_float(d):
    z = Zeta(d)
    assert float(z.square) == pytest.approx(zeta_float(d) ** 2)
    assert float(z) == pytest.approx(zeta_float(d))


@given(st.integers(3, 200), st.integers(0, 400))
def test_exact_comparison_agrees_with_float_off_the_boundary(d, m):
    zf = zeta_float(d)
    if abs(m - zf) > 1e-9:
        assert Zeta(d).exceeds(m) == (m < zf)
        assert Zeta(d).at_most(m) == (zf <= m)


def test_zeta_of_four():
    assert Zeta(4).square == Fraction(21, 4)


@pytest.mark.parametrize("d", range(4, 61))
def test_counting_inequality_false_below_zeta(d):
    z = Zeta(d)
    m = 2
    while z.exceeds(m):
        assert not check_counting_inequality(d, m)
        m += 1


@given(st.integers(4, 40), st.integers(2, 60))
def test_counting_sides_are_dimensions(d, m):
    lhs, rhs = counting_inequality_sides(d, m)
    assert lhs == (2 * d - 3) * comb(m - 2 + d, d)
    assert rhs == comb(m + d, d) - (m * d + 1)


@given(st.integers(4, 30), st.integers(2, 40))
def test_factored_form_is_a_rescaling(d, m):
    lhs, rhs = counting_inequality_sides(d, m)
    assert factored_inequality_lhs(d, m) == factorial(d) * (lhs - rhs)


@given(st.integers(3, 60), st.integers(-50, 50))
def test_quadratic_factorization(d, m):
    c2, c1, c0 = quadratic_coefficients(d)
    assert quadratic_part(d, m) == c2 * m * m + c1 * m + c0
    assert factored_coefficients(d) == (c2, c1, c0)
    # roots (d-1)/(d-2) -+ zeta
    for r in ((d - 1) / (d - 2) - zeta_float(d), (d - 1) / (d - 2) + zeta_float(d)):
        assert float(c2) * r * r + float(c1) * r + float(c0) == pytest.approx(0, abs=1e-6 * d * d)


def test_precondition():
    with pytest.raises(ValueError):
        check_counting_inequality(3, 5)
    with pytest.raises(ValueError):
        check_counting_inequality(5, 1)
