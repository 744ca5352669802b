import random

import pytest

from sigmahull import oracle
from sigmahull.codes import LinearCode
from sigmahull.errors import Incompatible, InvalidExponent
from sigmahull.fields import GF
from sigmahull.matrices import MatrixGF
from sigmahull.semilinear import (
    MonomialMatrix,
    SemilinearIsometry,
    bidual_relative_dim,
    relative_hull_dim,
    sigma_dual,
    sigma_hull,
    sigma_hull_dim,
)
from sigmahull.verify import random_code, random_monomial, random_sigma

F3 = GF(3)
F4 = GF(4)
F9 = GF(9)


def rep3():
    return LinearCode.from_generator(MatrixGF(F3, [[1, 1, 1]]))


# -- monomial matrices -----------------------------------------------------------


def test_permutation_row_convention():
    # (t_1..t_n) P = (t_tau(1), ..., t_tau(n)); perm stores 0-based images of tau
    tau = (2, 0, 1)
    p = MonomialMatrix(F3, tau, (1, 1, 1))
    t = (1, 2, 0)
    assert p.apply(t) == tuple(t[tau[i]] for i in range(3))
    # the tau(i)-th row of the dense P is the i-th identity row
    dense = p.dense()
    for i in range(3):
        assert dense.data[tau[i]] == tuple(1 if j == i else 0 for j in range(3))


def test_transpose_row_convention():
    # (t_1..t_n) P^T = (t_tau^-1(1), ..., t_tau^-1(n))
    tau = (2, 0, 1)
    inv = (1, 2, 0)
    p = MonomialMatrix(F3, tau, (1, 1, 1))
    t = (1, 2, 0)
    assert p.transpose().apply(t) == tuple(t[inv[i]] for i in range(3))


def test_monomial_validation():
    with pytest.raises(Incompatible):
        MonomialMatrix(F3, (0, 0), (1, 1))
    with pytest.raises(Incompatible):
        MonomialMatrix(F3, (0, 1), (1, 0))


def test_monomial_structural_vs_dense():
    rng = random.Random(2)
    for _ in range(60):
        f = (F3, F4, F9)[rng.randrange(3)]
        n = rng.randrange(1, 5)
        a = random_monomial(rng, f, n)
        b = random_monomial(rng, f, n)
        assert (a @ b).dense() == a.dense() @ b.dense()
        assert a.inverse().dense() @ a.dense() == MatrixGF.identity(f, n)
        assert a.transpose().dense() == a.dense().transpose()
        s = rng.randrange(1, f.e + 1)
        assert a.frobenius(s).dense() == a.dense().frobenius(s)
        c = random_monomial(rng, f, rng.randrange(1, 4))
        assert a.kron(c).dense() == a.dense().kron(c.dense())


# -- the isometry action -----------------------------------------------------------


def test_sigma_apply_examples():
    sig = SemilinearIsometry.euclidean(F3, 3)
    assert sig.apply((1, 2, 0)) == (1, 2, 0)
    assert sig.apply((0, 0, 0)) == (0, 0, 0)
    # M = diag(1,2) * P_(1 2) over GF(3): (v M)_j = v_tau(j) * d_tau(j)
    m = MonomialMatrix(F3, (1, 0), (1, 2))
    assert SemilinearIsometry(m, 1).apply((1, 2)) == (1, 1)


def test_sigma_apply_preserves_weight():
    rng = random.Random(13)
    for _ in range(60):
        f = (F3, F4, F9)[rng.randrange(3)]
        n = rng.randrange(1, 6)
        sig = random_sigma(rng, f, n)
        v = tuple(rng.randrange(f.q) for _ in range(n))
        assert sum(1 for x in sig.apply(v) if x) == sum(1 for x in v if x)


def test_sigma_inner_reductions():
    # Euclidean
    sig = SemilinearIsometry.euclidean(F3, 3)
    a, b = (1, 2, 1), (2, 2, 0)
    assert sig.inner(a, b) == (1 * 2 + 2 * 2 + 0) % 3
    assert sig.inner((0, 0, 0), b) == 0
    # Hermitian over GF(4): sum a_i b_i^2
    sigh = SemilinearIsometry.hermitian(F4, 2)
    f = F4
    a, b = (2, 3), (3, 2)
    expect = f.add(f.mul(2, f.pow(3, 2)), f.mul(3, f.pow(2, 2)))
    assert sigh.inner(a, b) == expect
    with pytest.raises(InvalidExponent):
        SemilinearIsometry.hermitian(F3, 2)


def test_sigma_apply_length_check():
    sig = SemilinearIsometry.euclidean(F3, 3)
    with pytest.raises(Incompatible):
        sig.apply((1, 2))


# -- duals -----------------------------------------------------------------------------


def test_sigma_dual_examples():
    c = rep3()
    sig = SemilinearIsometry.euclidean(F3, 3)
    assert sigma_dual(c, sig).same_code(c.dual())
    full = LinearCode.from_generator(MatrixGF.identity(F3, 3))
    assert sigma_dual(full, sig).k == 0
    # dual vectors annihilate the code under the sigma product
    rng = random.Random(41)
    for _ in range(40):
        f = (F3, F4)[rng.randrange(2)]
        n = rng.randrange(2, 5)
        code = random_code(rng, f, n, rng.randrange(1, n))
        sig = random_sigma(rng, f, n)
        dual = sigma_dual(code, sig)
        assert dual.k == n - code.k
        for a in dual.G.data:
            for b in code.G.data:
                assert sig.inner(a, b) == 0


def test_sigma_dual_equals_definition_oracle():
    rng = random.Random(43)
    for _ in range(120):
        f = GF(rng.choice([2, 3, 4, 5, 8, 9]))
        n = rng.randrange(2, 6)
        code = random_code(rng, f, n, rng.randrange(1, n + 1))
        sig = random_sigma(rng, f, n)
        assert sigma_dual(code, sig).same_code(oracle.sigma_dual_by_definition(code, sig))


def test_sigma_dual_is_euclidean_dual_of_image():
    rng = random.Random(47)
    for _ in range(60):
        f = (F3, F9)[rng.randrange(2)]
        n = rng.randrange(2, 6)
        code = random_code(rng, f, n, rng.randrange(1, n))
        sig = random_sigma(rng, f, n)
        assert sigma_dual(code, sig).same_code(sig.image_code(code).dual())


def test_galois_and_hermitian_reductions():
    rng = random.Random(53)
    for _ in range(60):
        f = (F4, F9)[rng.randrange(2)]
        n = rng.randrange(2, 5)
        code = random_code(rng, f, n, rng.randrange(1, n))
        for ell in range(f.e):
            sig = SemilinearIsometry.galois(f, n, ell)
            assert sigma_dual(code, sig).same_code(oracle.galois_dual_direct(code, ell))
        herm = SemilinearIsometry.hermitian(f, n)
        assert sigma_dual(code, herm).same_code(oracle.hermitian_dual_direct(code))
        eucl = SemilinearIsometry.euclidean(f, n)
        assert sigma_dual(code, eucl).same_code(code.dual())


# -- hull dimensions ----------------------------------------------------------------------


def test_relative_hull_examples():
    c = rep3()
    sig = SemilinearIsometry.euclidean(F3, 3)
    full = LinearCode.from_generator(MatrixGF.identity(F3, 3))
    assert relative_hull_dim(c, c, sig) == 1
    assert relative_hull_dim(c, full, sig) == 0
    assert sigma_hull_dim(full, sig) == 0


def test_bidual_examples():
    c = rep3()
    sig = SemilinearIsometry.euclidean(F3, 3)
    # Euclidean bidual is the code itself
    assert bidual_relative_dim(c, c, sig) == relative_hull_dim(c, c, sig)
    full = LinearCode.from_generator(MatrixGF.identity(F3, 3))
    assert bidual_relative_dim(full, c, sig) == 2


def test_hull_basis_spans_the_hull():
    rng = random.Random(59)
    for _ in range(80):
        f = GF(rng.choice([3, 4, 5, 9]))
        n = rng.randrange(2, 6)
        code = random_code(rng, f, n, rng.randrange(1, n + 1))
        sig = random_sigma(rng, f, n)
        dim, basis = sigma_hull(code, sig)
        assert basis.rows == dim
        for row in basis.data:
            assert code.contains_word(row)
            assert all(sig.inner(row, g) == 0 for g in code.G.data)


def test_hull_of_dual_equals_hull_of_code():
    rng = random.Random(61)
    for _ in range(80):
        f = GF(rng.choice([3, 4, 5, 8, 9]))
        n = rng.randrange(2, 6)
        code = random_code(rng, f, n, rng.randrange(1, n + 1))
        sig = random_sigma(rng, f, n)
        dual = sigma_dual(code, sig)
        if dual.k:
            assert sigma_hull_dim(dual, sig) == sigma_hull_dim(code, sig)


def test_incompatible_sigma():
    c = rep3()
    with pytest.raises(Incompatible):
        sigma_dual(c, SemilinearIsometry.euclidean(F3, 4))
    with pytest.raises(Incompatible):
        sigma_dual(c, SemilinearIsometry.euclidean(F4, 3))
