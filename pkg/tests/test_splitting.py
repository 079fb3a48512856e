import pytest

from satseq import laurent, splitting
from satseq.laurent import LaurentPoly as LP

M = LP.monomial


@pytest.mark.parametrize("d", range(3, 9))
def test_rank_and_bounds(d):
    res = splitting.splitting_type(d)
    assert len(res.twists) == d - 2
    assert splitting.bounds_hold(d, res.twists)
    assert laurent.mat_equal(laurent.reassemble(res.factorization), res.Q)
    assert laurent.is_invertible_over(res.factorization.E)
    assert laurent.is_invertible_over(res.factorization.F, negative=True)


@pytest.mark.parametrize("d", range(3, 9))
def test_cofactor_rule_independence(d):
    assert splitting.splitting_type(d, "lowest").twists == splitting.splitting_type(d, "highest").twists


def test_cofactor_rules_really_differ():
    differ = [d for d in range(4, 9)
              if splitting.cofactor_decomposition(d, "lowest") != splitting.cofactor_decomposition(d, "highest")]
    assert differ


@pytest.mark.parametrize("d", range(3, 9))
def test_upper_chart_gives_the_same_multiset(d):
    assert sorted(splitting.splitting_type_upper_chart(d)) == splitting.splitting_type(d).twists


@pytest.mark.parametrize("d", range(3, 7))
def test_generators_lie_in_the_kernel(d):
    for rule in splitting.RULES:
        assert all(p.is_zero() for p in splitting.kernel_residual(d, rule).values())


@pytest.mark.parametrize("d", range(3, 7))
def test_pairing_reproduces_hessian_coefficients(d):
    data = splitting.affine_hessian(d)
    for j in range(2, 2 * d - 1):
        assert splitting.pairing(d, j) == data.w(j)


def test_d4_example_values():
    Q = splitting.transition_matrix(4)
    assert laurent.mat_equal(Q, [[M(-1), M(3, -1)], [M(-3, 1), M(8)]])
    assert splitting.splitting_type(4).twists == [-11, -11]


def test_d4_factors_differ_from_published_by_a_constant():
    # E Q-side factors are unique up to a constant matrix commuting with D = I
    E_pub = [[M(3, 1), M(-1)], [M(-1), M(0)]]
    F_pub = [[M(0), M(1)], [M(1), M(-3, -1)]]
    b = splitting.splitting_type(4).factorization
    C1 = laurent.matmul(b.E, laurent.inverse(E_pub))
    C2 = laurent.matmul(b.F, laurent.inverse(F_pub))
    assert laurent.mat_equal(C1, C2)
    assert all(x.is_zero() or x.as_monomial()[1] == 0 for row in C1 for x in row)


def test_twist_convention():
    assert splitting.twists(4, [0, 0]) == [-11, -11]
    assert splitting.twists(5, [1, -1]) == [-15, -13]


def test_small_d_rejected():
    with pytest.raises(ValueError):
        splitting.affine_hessian(2)
    with pytest.raises(ValueError):
        splitting.cofactor_decomposition(4, "middle")
