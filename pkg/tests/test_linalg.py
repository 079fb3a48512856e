import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from satseq.linalg import (
    RankProblem,
    bareiss_rank,
    det_fraction,
    random_primes,
    rank_exact,
    rank_fraction,
    rank_mod_p,
)

entries = st.integers(-5, 5)


def matrices(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda r: st.integers(1, max_n).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)))


def as_problem(M):
    nrows = len(M)
    cols = [{i: M[i][j] for i in range(nrows) if M[i][j]} for j in range(len(M[0]))]
    return RankProblem(nrows, cols)


@given(matrices())
def test_three_rank_routes_agree(M):
    p = random_primes(1, 1)[0]
    exact = rank_exact(as_problem(M))
    assert exact == bareiss_rank(M) == rank_fraction(M)
    assert rank_mod_p(as_problem(M), p) == exact


@given(matrices())
def test_rank_transpose(M):
    P = as_problem(M)
    assert rank_exact(P) == rank_exact(P.transpose())


def test_low_rank_products():
    rng = random.Random(3)
    for _ in range(10):
        r = rng.randint(1, 5)
        A = [[rng.randint(-3, 3) for _ in range(r)] for _ in range(12)]
        B = [[rng.randint(-3, 3) for _ in range(30)] for _ in range(r)]
        M = [[sum(A[i][t] * B[t][j] for t in range(r)) for j in range(30)] for i in range(12)]
        want = rank_fraction(A)  # B is generically full rank
        if rank_fraction(B) == r:
            assert rank_exact(as_problem(M)) == want
            p = random_primes(5, 1)[0]
            assert rank_mod_p(as_problem(M), p, compress=True) == want


def test_modular_rank_is_a_lower_bound():
    # rank drops mod 7 but not over Q
    M = [[7, 0], [0, 1]]
    assert rank_mod_p(as_problem(M), 7, compress=False) == 1
    assert rank_exact(as_problem(M)) == 2


def test_primes_in_range_and_seeded():
    ps = random_primes(42, 3)
    assert ps == random_primes(42, 3)
    assert len(set(ps)) == 3
    assert all(2**30 < p < 2**31 for p in ps)


def test_det_fraction():
    assert det_fraction([[Fraction(1, 2), 1], [3, 4]]) == Fraction(-1)
    assert det_fraction([[1, 2], [2, 4]]) == 0


@pytest.mark.parametrize("n", [0, 1])
def test_degenerate_shapes(n):
    assert rank_exact(RankProblem(n, [])) == 0
