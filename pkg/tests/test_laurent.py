import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from satseq.laurent import (
    LaurentPoly,
    NotInvertible,
    birkhoff_factorize,
    determinant,
    format_laurent,
    identity,
    inverse,
    invert_variable,
    is_invertible_over,
    mat_equal,
    matmul,
    reassemble,
)

laurents = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=3).map(LaurentPoly)


@given(laurents, laurents, laurents)
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == LaurentPoly()


@given(laurents, laurents)
def test_invert_variable_is_a_ring_involution(p, q):
    assert (p * q).invert_variable() == p.invert_variable() * q.invert_variable()
    assert p.invert_variable().invert_variable() == p


def test_format():
    p = LaurentPoly({1: -3, 0: 8, -1: Fraction(1, 2)})
    assert format_laurent(p) == "-3*L + 8 + 1/2*L^-1"


def _elementary(rng, n, negative):
    """A product of elementary matrices over Q[L] (or Q[1/L])."""
    A = identity(n)
    for _ in range(3):
        i, j = rng.sample(range(n), 2)
        e = -rng.randint(0, 2) if negative else rng.randint(0, 2)
        step = identity(n)
        step[i][j] = LaurentPoly.monomial(rng.choice([-2, -1, 1, 3]), e)
        A = matmul(A, step)
    P = identity(n)
    for i in range(n):
        P[i][i] = LaurentPoly.monomial(rng.choice([1, -1, 2]))
    return matmul(A, P)


@pytest.mark.parametrize("seed", range(12))
def test_birkhoff_recovers_planted_exponents(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    E0, F0 = _elementary(rng, n, False), _elementary(rng, n, True)
    ks = [rng.randint(-3, 3) for _ in range(n)]
    D0 = [[LaurentPoly.monomial(1, ks[i]) if i == j else LaurentPoly() for j in range(n)] for i in range(n)]
    Q = matmul(matmul(inverse(E0), D0), F0)
    b = birkhoff_factorize(Q)
    assert sorted(b.exponents) == sorted(ks)
    assert mat_equal(reassemble(b), Q)
    assert is_invertible_over(b.E) and is_invertible_over(b.F, negative=True)


def test_identity_factorizes_trivially():
    b = birkhoff_factorize(identity(3))
    assert b.exponents == [0, 0, 0]


def test_diagonal():
    Q = [[LaurentPoly.monomial(1, 2), LaurentPoly()], [LaurentPoly(), LaurentPoly.monomial(5, -1)]]
    assert sorted(birkhoff_factorize(Q).exponents) == [-1, 2]


def test_inverse_and_determinant():
    rng = random.Random(1)
    A = _elementary(rng, 3, False)
    assert mat_equal(matmul(A, inverse(A)), identity(3))
    B = invert_variable(A)
    assert determinant(matmul(A, B)) == determinant(A) * determinant(B)


def test_non_unit_rejected():
    A = [[LaurentPoly({0: 1, 1: 1})]]
    with pytest.raises(NotInvertible):
        inverse(A)
